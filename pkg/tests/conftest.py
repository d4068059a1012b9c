"""Shared test configuration: a deterministic hypothesis profile.

Numerical property tests can be slow per example (quadrature, long sums), so
the deadline is disabled and the example count kept moderate; derandomize
keeps runs reproducible in CI.
"""

from hypothesis import HealthCheck, settings

settings.register_profile(
    "numeric",
    deadline=None,
    max_examples=50,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("numeric")
