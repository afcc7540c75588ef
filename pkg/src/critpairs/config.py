"""Run configuration read from an INI file.

Example::

    [budget]
    max_order = 16
    max_pairs = 2000000

    [run]
    workers = 4
    dedup = translations
    seed = 0

Every key is optional; missing keys keep the defaults below.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass

from critpairs.errors import ParseError
from critpairs.harness import DEDUP_MODES, DEFAULT_MAX_PAIRS


@dataclass(frozen=True)
class Config:
    max_order: int = 16
    max_pairs: int = DEFAULT_MAX_PAIRS
    workers: int = 1
    dedup: str = "translations"
    seed: int = 0


def load_config(path: str | None) -> Config:
    """Read ``path``; None gives the defaults.  OSError propagates."""
    if path is None:
        return Config()
    cp = configparser.ConfigParser()
    with open(path, encoding="utf-8") as fh:
        try:
            cp.read_file(fh)
        except configparser.Error as exc:
            raise ParseError(f"{path}: {exc}") from None
    d = Config()
    try:
        cfg = Config(
            max_order=cp.getint("budget", "max_order", fallback=d.max_order),
            max_pairs=cp.getint("budget", "max_pairs", fallback=d.max_pairs),
            workers=cp.getint("run", "workers", fallback=d.workers),
            dedup=cp.get("run", "dedup", fallback=d.dedup),
            seed=cp.getint("run", "seed", fallback=d.seed),
        )
    except ValueError as exc:
        raise ParseError(f"{path}: {exc}") from None
    if cfg.dedup not in DEDUP_MODES:
        raise ParseError(f"{path}: dedup must be one of {DEDUP_MODES}")
    if cfg.workers < 1 or cfg.max_order < 1 or cfg.max_pairs < 1:
        raise ParseError(f"{path}: budgets and workers must be positive")
    return cfg
