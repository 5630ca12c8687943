"""Self-contained xorshift64* generator for reproducible randomized checks.

State update x ^= x >> 12; x ^= x << 25; x ^= x >> 27; output is the state
times the 64-bit multiplier 0x2545F4914F6CDD1D (Vigna's xorshift64*). Seeds
pass through one splitmix64 scramble so that small consecutive seeds give
unrelated streams; a zero state is remapped to the splitmix64 increment.
Everything is integer arithmetic, so streams are identical on every platform,
which keeps report bytes stable across runs and machines.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_MULTIPLIER = 0x2545F4914F6CDD1D
_SPLITMIX_INC = 0x9E3779B97F4A7C15


def _splitmix64(x: int) -> int:
    x = (x + _SPLITMIX_INC) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (x ^ (x >> 31)) & _MASK64


class XorShift64Star:
    def __init__(self, seed: int):
        self._state = _splitmix64(seed & _MASK64) or _SPLITMIX_INC

    def next_uint64(self) -> int:
        x = self._state
        x ^= x >> 12
        x = (x ^ (x << 25)) & _MASK64
        x ^= x >> 27
        self._state = x
        return (x * _MULTIPLIER) & _MASK64

    def uniform(self) -> float:
        """Double in [0, 1) from the top 53 bits."""
        return (self.next_uint64() >> 11) * 2.0**-53

    def uniforms(self, count: int) -> np.ndarray:
        return np.array([self.uniform() for _ in range(count)])

    def signs(self, count: int) -> np.ndarray:
        """count values in {-1, +1}, one per stream bit, LSB first per word."""
        words = (count + 63) // 64
        raw = np.array([self.next_uint64() for _ in range(words)], dtype="<u8")
        bits = np.unpackbits(raw.view(np.uint8), bitorder="little")[:count]
        return np.where(bits == 1, 1.0, -1.0)

    def sign_matrix(self, rows: int, cols: int) -> np.ndarray:
        return self.signs(rows * cols).reshape(rows, cols)
