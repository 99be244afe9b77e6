"""Resource guards for the expensive sweeps.

Pairwise classification touches ~T(n)^2/2 coefficient vectors, so the cap
kicks in much earlier than for single-tree work.
"""

from dataclasses import dataclass

from .errors import LimitError


@dataclass(frozen=True)
class Limits:
    pairwise_n: int = 12
    per_tree_n: int = 20


DEFAULT_LIMITS = Limits()


def check_limit(n: int, cap: int, force: bool, what: str) -> None:
    if n > cap and not force:
        raise LimitError(
            f"{what} at n={n} exceeds the guard (n <= {cap}); pass force=True "
            f"(--force on the command line) to run it anyway"
        )
