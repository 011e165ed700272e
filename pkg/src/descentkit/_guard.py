import os

ENV_VAR = "DESCENTKIT_MAX_N"


class GuardExceeded(ValueError):
    """An input is larger than an exhaustive routine is allowed to handle."""


def limit(default: int) -> int:
    raw = os.environ.get(ENV_VAR)
    if raw is None or not raw.strip():
        return default
    return int(raw)


def check(n: int, default: int, what: str) -> None:
    cap = limit(default)
    if n > cap:
        raise GuardExceeded(f"{what}: n={n} exceeds the limit {cap} (set {ENV_VAR} to override)")
