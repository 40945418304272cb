"""Saturation numbers of monomial ideals: arithmetic, colon chains, Borel closures, Veronese-type ideals."""

from .borel import (
    borel_closure,
    bounded_borel_closure,
    bounded_stable_closure,
    principal_power,
    principal_power_layer,
    sat_principal_power,
    stable_closure,
)
from .errors import (
    CapExceeded,
    DimensionMismatch,
    ExponentOverflow,
    InvalidMove,
    NotApplicable,
    NotDivisible,
    ParseError,
    SatmonError,
)
from .ideal import (
    MonomialIdeal,
    contains,
    contains_ideal,
    equals,
    format_ideal,
    from_json,
    generator_degree,
    ideal_sum,
    intersect,
    is_bounded_stable,
    is_bounded_strongly_stable,
    is_equigenerated,
    is_stable,
    is_strongly_stable,
    minimalize,
    parse_ideal,
    power,
    product,
    restrict_bounded,
    to_json,
)
from .monomial import (
    Monomial,
    divides,
    exchange,
    format_monomial,
    is_bounded,
    lcm,
    max_index,
    parse_bound,
    parse_monomial,
    quotient,
    total_degree,
)
from .saturation import (
    SaturationReport,
    colon_max,
    colon_var,
    layer_formula_equigen,
    sat,
    sat_equigen_bounded_formula,
    sat_strongly_stable_formula,
    saturate,
    socle_equigen_bounded,
    socle_monomials,
)
from .veronese import (
    QuasiLinearForm,
    VeroneseSpec,
    quasilinear,
    sat_veronese,
    sat_veronese_power,
    veronese_ideal,
    veronese_is_zero,
    veronese_layer,
)

__version__ = "0.1.0"
