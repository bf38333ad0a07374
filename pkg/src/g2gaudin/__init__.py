"""Exact arithmetic for the G2 Gaudin model: Bethe ansatz solutions,
order-7 differential operators, and self-self-dual spaces of polynomials."""

__version__ = "0.1.0"
