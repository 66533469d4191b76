"""Ambiguous numbers of Q(i, sqrt3) under the action of the Picard group PSL(2, Z[i])."""

from .enumeration import EnumerationResult, belongs_to_smaller_path, divisor_candidates, enumerate_ambiguous
from .exceptions import *  # noqa: F401,F403
from .field import INF, FieldElement, GaussianInt, Infinity, conj_over_Qi, conj_over_Qsqrt3, invert
from .graph import (
    AmbiguousGraph,
    ClosedPath,
    bfs_orbit_ambiguous,
    build_graph,
    check_structure,
    export_dot,
    export_json,
    layer_cycles,
    load_json,
    partner,
)
from .group import GENERATORS, IDENTITY, MobiusMap, Word, apply, apply_word, compose, generator, inverse, verify_relators
from .quadratic import (
    AmbiguityClass,
    RealQuadratic,
    act_A2_image,
    act_A_image,
    act_B,
    act_C,
    act_C2,
    act_D,
    canonicalize,
    classify,
    conj,
    d_value,
    embed,
    extract,
    render,
)

__version__ = "0.1.0"
