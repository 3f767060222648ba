"""Exact rational stable equivariant computations for cyclic 2-groups.

The package computes, in exact arithmetic over the rationals:

* the Burnside algebra of each subgroup level, with marks, restriction,
  transfer and idempotents (``burnside``);
* the semisimple algebra of rational Mackey-functor classes, box
  products, and the classifier from Weyl eigenvalue data (``mackey``);
* the lattice of virtual representation degrees, with restriction and
  fixed-point data, plus a parser for degree expressions (``rolattice``);
* RO(G)-graded rational stable stems by three independent methods, the
  monomial model of the point ring, its presentation, and the
  geometric/homotopy fixed-point lattices (``stems``);
* cohomology of equivariant classifying spaces assembled from
  fixed-point diagrams, the circle presentation, maximal-torus
  comparisons and the idempotent collapse (``classifying``);
* a command-line interface over all of it (``cli``).
"""

from .burnside import BurnsideElement, GroupLevel, from_marks, idempotents
from .classifying import (CirclePresentation, CollapsePresentation,
                          FixedPointDiagram, LevelComponents,
                          SigmaTwoComparison, TorusCheckSU2, TorusCheckU,
                          bgs1_presentation, bsigma2_consistency, bu_series,
                          collapse, collapse_expand, compositions,
                          fixed_point_data, gm_assemble, sym_invariants_series,
                          torus_check_su2, torus_check_u, weyl_eigendata)
from .mackey import (MINUS, PLUS, GradedTable, MackeyClass,
                     NonSignIsotypicError, classify)
from .rolattice import (DegreeSyntaxError, RawRep, VirtualRep, parse_degree)
from .series import TruncatedSeries
from .stems import (STEM_METHODS, FixedPointRings, PointPresentation,
                    PresentationGenerator, SectorElement, SectorMonomial,
                    StemTuple, TupleAmbiguityError, decode_degree,
                    fixed_point_rings, lattice_mismatches, point_presentation,
                    sector_alphabet, sphere_homology, stem_at, stem_at_oracle,
                    stem_at_sector)

__version__ = "0.1.0"

__all__ = [
    "BurnsideElement", "GroupLevel", "from_marks", "idempotents",
    "CirclePresentation", "CollapsePresentation", "FixedPointDiagram",
    "LevelComponents", "SigmaTwoComparison", "TorusCheckSU2", "TorusCheckU",
    "bgs1_presentation", "bsigma2_consistency", "bu_series", "collapse",
    "collapse_expand", "compositions", "fixed_point_data", "gm_assemble",
    "sym_invariants_series", "torus_check_su2", "torus_check_u",
    "weyl_eigendata",
    "MINUS", "PLUS", "GradedTable", "MackeyClass", "NonSignIsotypicError",
    "classify",
    "DegreeSyntaxError", "RawRep", "VirtualRep", "parse_degree",
    "TruncatedSeries",
    "STEM_METHODS", "FixedPointRings", "PointPresentation",
    "PresentationGenerator", "SectorElement", "SectorMonomial", "StemTuple",
    "TupleAmbiguityError", "decode_degree", "fixed_point_rings",
    "lattice_mismatches", "point_presentation", "sector_alphabet",
    "sphere_homology", "stem_at", "stem_at_oracle", "stem_at_sector",
    "__version__",
]
