"""Identity registry and suite runner."""

from .registry import (
    REGISTRY, SCOPES, CheckResult, any_failed, check_identity, david_barton_check,
    identities_in, run_suite,
)

__all__ = [
    "REGISTRY", "SCOPES", "CheckResult", "any_failed", "check_identity",
    "david_barton_check", "identities_in", "run_suite",
]
