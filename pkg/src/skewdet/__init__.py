"""Exact combinatorics of skew shapes: outside nested decompositions,
cutting strips, the # composition, and the determinantal identities they
produce for Schur functions and standard Young tableau counts."""

from .shapes import SkewShape, boxes_to_skew, skew_boxes

__all__ = ["SkewShape", "boxes_to_skew", "skew_boxes"]
__version__ = "0.1.0"
