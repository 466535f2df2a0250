"""Exact equivariant zeta-function classifier for invariant simple Nash germs."""

from ._eqzeta import (  # noqa: F401
    GermParseError,
    OutOfRangeError,
    beta_Y,
    beta_Y_fiber,
    beta_curve_zero,
    beta_cusp_fiber,
    beta_diagonal_zero,
    beta_sphere,
    compare,
    germ_info,
    oracle_Y,
    parse_germ,
    table,
    zeta,
)
