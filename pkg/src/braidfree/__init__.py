"""
Braid groups acting on free groups.

The n-string braid group is realised here as a group of automorphisms of the
free group on t_1..t_n.  The package covers the word problem through image
descent, the sigma_1 trichotomy and the right-ordering it induces, ends of the
free group and their ordering, actions on free products of cyclic groups,
and the planar-word test that describes the orbit of t_1.
"""

from .braids import (
    BraidAutomorphism,
    BraidWord,
    apply_braid,
    automorphism_of,
    format_braid,
    parse_braid,
    random_braid,
    recover_braid_word,
    validate_tuple,
)
from .cyclic import (
    PhiElement,
    TorsionWord,
    phi_basis,
    surface_check,
    tau,
    tw_apply_braid,
    tw_images,
    tw_recover_braid,
    wada_action,
)
from .dehornoy import Order, Trichotomy, classify_sigma1, compare, sigma1_nonpositive_form
from .ends import End, act_on_end, compare_ends, end_is_squarefree, make_end, thurston_compare
from .errors import DomainError
from .freewords import FreeWord, cyclic_reduce, format_word, generator, parse_word, z1
from .planarity import PlanarEmbedding, is_planar, orbit_reduce, planar_oracle, tuple_orbit_witness, whitehead_expansion

__all__ = [
    "BraidAutomorphism",
    "BraidWord",
    "DomainError",
    "End",
    "FreeWord",
    "Order",
    "PhiElement",
    "PlanarEmbedding",
    "TorsionWord",
    "Trichotomy",
    "act_on_end",
    "apply_braid",
    "automorphism_of",
    "classify_sigma1",
    "compare",
    "compare_ends",
    "cyclic_reduce",
    "end_is_squarefree",
    "format_braid",
    "format_word",
    "generator",
    "is_planar",
    "make_end",
    "orbit_reduce",
    "parse_braid",
    "parse_word",
    "phi_basis",
    "planar_oracle",
    "random_braid",
    "recover_braid_word",
    "sigma1_nonpositive_form",
    "surface_check",
    "tau",
    "thurston_compare",
    "tuple_orbit_witness",
    "tw_apply_braid",
    "tw_images",
    "tw_recover_braid",
    "validate_tuple",
    "wada_action",
    "whitehead_expansion",
    "z1",
]
