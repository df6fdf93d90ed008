"""OEIS b-file fixtures and their regeneration by enumeration.

A b-file has one ``index value`` pair per line; ``#`` starts a comment.
Bundled fixtures live in ``hrruns/fixtures``; ``HRRUNS_FIXTURES`` points
elsewhere.  Network fetches are opt-in.
"""

from __future__ import annotations

import os
import urllib.request
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from .andre import count_table, snakes
from .errors import FixtureError, RegistryError
from .polynomial.generators import left_peak_counts, run_polynomial

BUNDLED = Path(__file__).parent / "fixtures"


def read_bfile(source: str | Path) -> list[tuple[int, int]]:
    """Parse b-file text (or a path to one) into ``(index, value)`` pairs."""
    text = Path(source).read_text() if isinstance(source, Path) else source
    out: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FixtureError(f"line {lineno}: expected 'index value', got {raw!r}")
        try:
            idx, val = int(parts[0]), int(parts[1])
        except ValueError:
            raise FixtureError(f"line {lineno}: non-integer field in {raw!r}") from None
        if out and idx != out[-1][0] + 1:
            raise FixtureError(f"line {lineno}: index {idx} does not follow {out[-1][0]}")
        out.append((idx, val))
    return out


def format_bfile(values, offset: int, header: str = "") -> str:
    lines = [f"# {h}" for h in header.splitlines()]
    lines += [f"{offset + i} {v}" for i, v in enumerate(values)]
    return "\n".join(lines) + "\n"


def write_bfile(path: str | Path, values, offset: int, header: str = "") -> None:
    Path(path).write_text(format_bfile(values, offset, header))


# --- regeneration ---------------------------------------------------------------

def _runs_rows(n_max: int) -> list[int]:
    out = []
    for n in range(2, n_max + 1):
        p = run_polynomial(n, "A")
        out.extend(p.coeff(k) for k in range(1, n))
    return out


def _andre_rows(n_max: int) -> list[int]:
    out = []
    for n in range(1, n_max + 1):
        out.extend(count_table(n, "d").values())
    return out


def _left_peak_rows(n_max: int) -> list[int]:
    out = [1]  # n = 0: the empty permutation
    for n in range(1, n_max + 1):
        out.extend(left_peak_counts(n))
    return out


def _euler(n_max: int) -> list[int]:
    return [1] + [count_table(n, "d").total() for n in range(1, n_max + 1)]


def _springer(n_max: int) -> list[int]:
    return [1] + [len(snakes(n)) for n in range(1, n_max + 1)]


@dataclass(frozen=True)
class OeisSequence:
    id: str
    description: str
    offset: int
    regenerate: Callable[[int], list]
    default_n: int
    max_n: int


SEQUENCES = {
    s.id: s for s in (
        OeisSequence("A059427", "permutations of [n] by alternating runs, rows n >= 2, k = 1..n-1",
                     2, _runs_rows, 9, 12),
        OeisSequence("A094503", "Andre permutations of [n] by descents, rows n >= 1", 1, _andre_rows, 9, 10),
        OeisSequence("A008971", "permutations of [n] by left peaks, rows n >= 0", 0, _left_peak_rows, 9, 12),
        OeisSequence("A000111", "Euler numbers E_n, n >= 0", 0, _euler, 9, 10),
        OeisSequence("A001586", "Springer numbers S_n, n >= 0", 0, _springer, 7, 7),
    )
}


def fixtures_dir() -> Path:
    env = os.environ.get("HRRUNS_FIXTURES")
    return Path(env) if env else BUNDLED


def fixture_path(seq_id: str, directory: Path | None = None) -> Path:
    return (directory or fixtures_dir()) / f"b{seq_id[1:]}.txt"


def fetch_bfile(seq_id: str, timeout: float = 30.0) -> str:
    url = f"https://oeis.org/{seq_id}/b{seq_id[1:]}.txt"
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        return resp.read().decode()


def load_fixture(seq_id: str, directory: Path | None = None, allow_network: bool = False):
    path = fixture_path(seq_id, directory)
    if path.exists():
        return read_bfile(path)
    if allow_network:
        return read_bfile(fetch_bfile(seq_id))
    raise FileNotFoundError(f"no fixture for {seq_id} at {path} and network access is off")


@dataclass(frozen=True)
class OeisComparison:
    seq_id: str
    n_max: int
    compared: int
    first_diff: int | None
    expected: int | None = None
    got: int | None = None
    warnings: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.first_diff is None


def compare(seq_id: str, n_max: int | None = None, directory: Path | None = None,
            allow_network: bool = False) -> OeisComparison:
    """Regenerate ``seq_id`` up to ``n_max`` and diff it against the fixture on the overlap."""
    if seq_id not in SEQUENCES:
        raise RegistryError(f"unknown sequence {seq_id!r}; bundled: {sorted(SEQUENCES)}")
    seq = SEQUENCES[seq_id]
    n_max = seq.default_n if n_max is None else min(n_max, seq.max_n)
    fixture = load_fixture(seq_id, directory, allow_network)
    fresh = seq.regenerate(n_max)
    warnings = []
    if fixture and fixture[0][0] != seq.offset:
        warnings.append(f"fixture starts at index {fixture[0][0]}, expected offset {seq.offset}")
    if len(fixture) < len(fresh):
        warnings.append(f"fixture has {len(fixture)} terms; comparing only the overlap with {len(fresh)} generated")
    for pos, ((idx, want), got) in enumerate(zip(fixture, fresh)):
        if want != got:
            return OeisComparison(seq_id, n_max, pos + 1, idx, want, got, warnings)
    return OeisComparison(seq_id, n_max, min(len(fixture), len(fresh)), None, warnings=warnings)
