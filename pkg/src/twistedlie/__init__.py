"""Exact-arithmetic Lie theory toolkit.

Modules:
  linalg      -- exact scalars (rationals, Gaussian rationals) and sparse vectors
  rootsystem  -- finite root systems, Weyl groups, weight multiplicities
  folding     -- diagram foldings, coinvariant lattices, the iota map
  cells       -- dominance order, cover relations, smooth-locus classification
  crystal     -- minuscule and tensor-product crystals, highest-weight components
  reps        -- exact representations, relation checking, Weyl group action
  e6          -- the E6 weight-zero / Levi-extremal verification suite
  loops       -- twisted loop algebras and the hyperspecial basis checks
  cli         -- command line front end
"""

__version__ = "0.1.0"
