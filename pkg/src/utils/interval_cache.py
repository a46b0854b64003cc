#!/usr/bin/env python3
"""
Interval Cache
Stores lower Bruhat intervals on disk, keyed by engine version, system and word.
Any failure to read or write the cache degrades to recomputation.
"""

import hashlib
import logging
import os
import tempfile
from pathlib import Path
from typing import List, Optional, Union

import orjson
from pydantic import BaseModel, ValidationError

try:
    from config import ENGINE_VERSION
    from core.bruhat import BruhatInterval, length_profile, lower_interval
    from core.coxeter import CoxeterElement, from_word, is_reduced_word, parse_word
    from core.errors import FlagOrbitError
    from core.rootdata import RootSystem
except ImportError:
    from ..config import ENGINE_VERSION
    from ..core.bruhat import BruhatInterval, length_profile, lower_interval
    from ..core.coxeter import CoxeterElement, from_word, is_reduced_word, parse_word
    from ..core.errors import FlagOrbitError
    from ..core.rootdata import RootSystem

logger = logging.getLogger(__name__)


class CachedInterval(BaseModel):
    """On-disk payload of one cached interval."""
    engine_version: str
    system: str
    top: str
    members: List[str]
    poincare: List[int]


class IntervalCache:
    """
    Disk cache for lower intervals. A cache without a directory is a no-op,
    so callers never need to branch on whether caching is configured.
    """

    def __init__(self, cache_dir: Optional[Union[str, Path]] = None):
        self.cache_dir = Path(cache_dir) if cache_dir else None
        self.hits = 0
        self.misses = 0

        if self.cache_dir is not None:
            try:
                self.cache_dir.mkdir(parents=True, exist_ok=True)
            except OSError as e:
                logger.warning(
                    f"Cache directory {self.cache_dir} unavailable, caching disabled: {e}"
                )
                self.cache_dir = None

    @property
    def enabled(self) -> bool:
        return self.cache_dir is not None

    @staticmethod
    def cache_key(system_label: str, word: str) -> str:
        """Hash of engine version, system and canonical word."""
        raw = f"{ENGINE_VERSION}|{system_label}|{word}"
        return hashlib.sha256(raw.encode("utf-8")).hexdigest()

    def _path(self, system: RootSystem, w: CoxeterElement) -> Path:
        return self.cache_dir / f"{self.cache_key(system.label, w.word_string)}.json"

    def load(self, system: RootSystem, w: CoxeterElement) -> Optional[BruhatInterval]:
        """Return the cached interval of w, or None on a miss or unreadable entry."""
        if not self.enabled:
            return None

        path = self._path(system, w)
        if not path.exists():
            self.misses += 1
            return None

        try:
            payload = CachedInterval(**orjson.loads(path.read_bytes()))
            interval = self._rebuild(system, w, payload)
        except (OSError, orjson.JSONDecodeError, ValidationError, TypeError, FlagOrbitError, ValueError) as e:
            logger.warning(f"Ignoring unreadable cache entry {path.name}: {e}")
            self.misses += 1
            return None

        self.hits += 1
        logger.debug(f"Cache hit for {system.label} {w.word_string}")
        return interval

    def _rebuild(self, system: RootSystem, w: CoxeterElement, payload: CachedInterval) -> BruhatInterval:
        if (
            payload.engine_version != ENGINE_VERSION
            or payload.system != system.label
            or payload.top != w.word_string
        ):
            raise ValueError("cache entry does not match its key")

        members = set()
        for text in payload.members:
            word = parse_word(text)
            if not is_reduced_word(system, word):
                raise ValueError(f"non-reduced member word {text}")
            members.add(from_word(system, word))

        poincare = length_profile(members, w.length)
        if w not in members or list(poincare) != payload.poincare:
            raise ValueError("cache entry is inconsistent")

        return BruhatInterval(top=w, members=frozenset(members), poincare=poincare)

    def store(self, system: RootSystem, interval: BruhatInterval) -> bool:
        """Write atomically: temporary file in the cache directory, then rename."""
        if not self.enabled:
            return False

        payload = CachedInterval(
            engine_version=ENGINE_VERSION,
            system=system.label,
            top=interval.top.word_string,
            members=[u.word_string for u in interval.sorted_members()],
            poincare=list(interval.poincare),
        )
        path = self._path(system, interval.top)

        try:
            fd, tmp_name = tempfile.mkstemp(dir=self.cache_dir, suffix=".tmp")
            try:
                with os.fdopen(fd, "wb") as f:
                    f.write(orjson.dumps(payload.model_dump()))
                os.replace(tmp_name, path)
            except BaseException:
                if os.path.exists(tmp_name):
                    os.unlink(tmp_name)
                raise
        except OSError as e:
            logger.warning(f"Failed to save interval cache entry: {e}")
            return False

        return True

    def lower_interval(self, w: CoxeterElement) -> BruhatInterval:
        """Cached lower interval: load, else compute and store."""
        interval = self.load(w.system, w)
        if interval is None:
            interval = lower_interval(w)
            self.store(w.system, interval)
        return interval


def cache_interval(cache: IntervalCache, interval: BruhatInterval) -> bool:
    return cache.store(interval.top.system, interval)


__all__ = ["CachedInterval", "IntervalCache", "cache_interval"]
