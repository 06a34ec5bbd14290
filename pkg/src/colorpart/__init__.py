"""Exact arithmetic for multiparameter colored partition diagram categories.

Subpackages cover diagram arithmetic (diagrams), the monoid presentation
(algebra), the color-preserving groupoid expansion (groupoid), the two
Schensted-type bijections (rs, ribbon), wreath-product characters and
coefficient identities (characters), cell modules with Gram and Cartan
data (modules_rep), exact cyclotomic/polynomial scalars (scalars), and the
verification suite (verify) behind the `colorpart` command line tool.
"""

__version__ = "0.1.0"
