"""
Counter-based random streams for verification cases

Every case gets its own Philox stream keyed by (seed, suite, case index);
cases that loop over independent samples spawn one child stream per sample
index from it. Serial and threaded runs therefore draw the same numbers.
"""

import hashlib
from typing import List

import numpy as np


def suite_key(suite: str) -> int:
    """Stable 64-bit integer derived from a suite name"""
    return int.from_bytes(hashlib.sha256(suite.encode('utf-8')).digest()[:8], 'big')


def case_rng(seed: int, suite: str, case_index: int) -> np.random.Generator:
    """
    Independent generator for one case.

    Args:
        seed: Run seed
        suite: Suite name
        case_index: Position of the case inside its suite

    Returns:
        numpy Generator backed by Philox
    """
    entropy = [int(seed), suite_key(suite), int(case_index)]
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy)))


def sample_rngs(rng: np.random.Generator, count: int) -> List[np.random.Generator]:
    """Child generators for sample indices 0..count-1 of a case"""
    children = rng.bit_generator.seed_seq.spawn(count)
    return [np.random.Generator(np.random.Philox(child)) for child in children]
