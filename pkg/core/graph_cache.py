"""
Graph Cache

Stores enumerated fixed-point graph classes as JSON files, one per degree,
and reloads them with full verification. A file that fails any check is
reported as CacheInvalid and recomputed; it never crashes a computation.
"""

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from .errors import CacheInvalid, GraphStructureError
from .graphs import GraphClass, coloring_shortfall, enumerate_fixed_graphs

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1


def classes_checksum(entries: Sequence[Dict[str, Any]]) -> str:
    """SHA-256 of the class list in canonical JSON form."""
    payload = json.dumps(list(entries), sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(payload.encode('utf-8')).hexdigest()


class GraphCache:
    """
    Manages enumeration results on disk and in memory
    """

    def __init__(self, cache_dir: Optional[Path] = None, enabled: bool = True):
        self.cache_dir = Path(cache_dir) if cache_dir is not None else None
        self.enabled = enabled and self.cache_dir is not None
        self._memory: Dict[int, List[GraphClass]] = {}
        self.stats = {
            'hits': 0,
            'misses': 0,
            'invalid': 0,
            'writes': 0
        }
        if self.enabled:
            logger.debug(f"Graph cache directory: {self.cache_dir}")

    def path_for(self, degree: int) -> Path:
        if self.cache_dir is None:
            raise CacheInvalid("no cache directory configured")
        return self.cache_dir / f"graphs_d{degree}.json"

    def cache_graphs(self, degree: int, classes: Optional[Sequence[GraphClass]] = None) -> List[GraphClass]:
        """
        Write the classes of one degree to disk (enumerating them if not given).

        Returns:
            List[GraphClass]: the classes written
        """
        classes = list(classes) if classes is not None else enumerate_fixed_graphs(degree)
        entries = [c.to_dict() for c in classes]
        document = {
            'format_version': FORMAT_VERSION,
            'degree': degree,
            'classes': entries,
            'checksum': classes_checksum(entries)
        }
        path = self.path_for(degree)
        path.parent.mkdir(parents=True, exist_ok=True)
        with tempfile.NamedTemporaryFile('w', dir=path.parent, delete=False, suffix='.tmp', encoding='utf-8') as handle:
            json.dump(document, handle, indent=1)
            tmp_name = handle.name
        try:
            os.replace(tmp_name, path)
        except OSError:
            os.unlink(tmp_name)
            raise
        self.stats['writes'] += 1
        self._memory[degree] = classes
        logger.info(f"Cached {len(classes)} graph classes for degree {degree} at {path}")
        return classes

    def load_graphs(self, degree: int) -> List[GraphClass]:
        """
        Load and verify the cached classes of one degree.

        Raises:
            FileNotFoundError: nothing cached for this degree
            CacheInvalid: unreadable or corrupt file, version or checksum mismatch,
                or a class list that misses or repeats colorings
        """
        path = self.path_for(degree)
        try:
            with open(path, 'r', encoding='utf-8') as handle:
                document = json.load(handle)
        except FileNotFoundError:
            raise
        except json.JSONDecodeError as e:
            raise CacheInvalid(f"{path}: not valid JSON ({e})") from e
        except (OSError, UnicodeDecodeError) as e:
            raise CacheInvalid(f"{path}: unreadable ({e})") from e

        if not isinstance(document, dict):
            raise CacheInvalid(f"{path}: unexpected document type")
        if document.get('format_version') != FORMAT_VERSION:
            raise CacheInvalid(f"{path}: format version {document.get('format_version')!r} != {FORMAT_VERSION}")
        if document.get('degree') != degree:
            raise CacheInvalid(f"{path}: holds degree {document.get('degree')!r}, expected {degree}")
        entries = document.get('classes')
        if not isinstance(entries, list):
            raise CacheInvalid(f"{path}: missing class list")
        if document.get('checksum') != classes_checksum(entries):
            raise CacheInvalid(f"{path}: checksum mismatch")

        classes = []
        for index, entry in enumerate(entries):
            try:
                stored = GraphClass.from_dict(entry)
            except (GraphStructureError, KeyError, TypeError, ValueError) as e:
                raise CacheInvalid(f"{path}: class {index} is malformed ({e})") from e
            if stored.representative.degree != degree:
                raise CacheInvalid(f"{path}: class {index} has degree {stored.representative.degree}")
            recomputed = GraphClass.from_tree(stored.representative)
            if recomputed != stored:
                raise CacheInvalid(f"{path}: class {index} does not match its canonical key or automorphism order")
            classes.append(stored)

        keys = [c.canonical_key for c in classes]
        if keys != sorted(set(keys)):
            raise CacheInvalid(f"{path}: classes are duplicated or out of order")
        shortfall = coloring_shortfall(degree, classes)
        if shortfall:
            raise CacheInvalid(f"{path}: class list does not cover {len(shortfall)} weighted tree shape(s)")
        return classes

    def get_graphs(self, degree: int) -> List[GraphClass]:
        """Classes for a degree: memory, then disk, then a fresh enumeration."""
        if degree in self._memory:
            self.stats['hits'] += 1
            return self._memory[degree]

        if self.enabled:
            try:
                classes = self.load_graphs(degree)
                self.stats['hits'] += 1
                self._memory[degree] = classes
                logger.info(f"Loaded {len(classes)} cached graph classes for degree {degree}")
                return classes
            except FileNotFoundError:
                self.stats['misses'] += 1
            except CacheInvalid as e:
                self.stats['invalid'] += 1
                logger.warning(f"Discarding graph cache: {e}")

        classes = enumerate_fixed_graphs(degree)
        if self.enabled:
            try:
                self.cache_graphs(degree, classes)
            except OSError as e:
                logger.warning(f"Could not write graph cache for degree {degree}: {e}")
        self._memory[degree] = classes
        return classes
