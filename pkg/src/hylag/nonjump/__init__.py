"""Numeric and exact certification of the inequalities behind the non-jump constructions."""

from .claims import *  # noqa: F401,F403
from .reports import ClaimRefused, ClaimReport, VerificationReport  # noqa: F401
