"""Characters for the dual pair (U(n), U(p,q))."""

from ._core import (
    HighestWeight,
    PreconditionError,
    NumericalDomainError,
    __version__,
    char_closed_form_n1,
    char_noncompact_u11,
    dimension,
    enumerate_weights,
    hecht_check,
    in_semigroup,
    limit_convention_constant,
    p_function,
    residue_circle_integral,
    rho,
    run_verify,
    theta_on_torus,
    theta_u11,
    transfer_integral_general,
    transfer_integral_n1,
    transfer_limit_n1,
    weyl_character,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
