"""Crosscap numbers of 2-bridge knots from even continued fractions, and the
crosscap inequality for epimorphisms between their groups."""

from .contfrac import (
    CFVector,
    collapse_zeros,
    evaluate,
    even_cf,
    is_shortenable,
    positive_cf,
    shortest_cf,
    shortest_len_bruteforce,
)
from .crosscap import InvariantRecord, crossing_number, crosscap, genus, invariants
from .depth import AuxDatum, aux_trace, depth_auto, depth_variant, initial_aux, step_aux
from .epiorder import (
    CertificateError,
    OrderCertificate,
    Parsing,
    build_parsed,
    greater_than,
    make_certificate,
    parse,
    parse_collapsed,
)
from .farey import (
    DomainError,
    Fraction,
    KnotClass,
    canonicalize,
    depth_oracle,
    knot_class,
    mediant,
    parents,
)

__version__ = "0.1.0"
