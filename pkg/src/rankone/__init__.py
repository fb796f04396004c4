"""Simple rank-one torsion-free modules over sl2, the first Weyl algebra and osp(1|2)."""

__version__ = "0.1.0"
