"""A Fenwick tree specialised to prefix *maximum* queries.

Supports two operations over keys 1..size, both O(log size):

* ``insert(key, score, payload)`` — record a score at a key;
* ``prefix_max(key)`` / ``prefix_argmax(key)`` — best score (and its
  payload) among keys <= key.

Unlike the additive Fenwick tree, maximum is not invertible, so there is
no delete; the matching code that needs fresh trees simply builds new
ones (or, in the compiled kernels, reuses arrays with a stamp trick).

Payloads let callers recover *where* the best score came from, which is
what turns a DP over run lengths into an actual run of positions.
"""

from __future__ import annotations

__all__ = ["PrefixMaxTree"]


class PrefixMaxTree:
    __slots__ = ("size", "_score", "_payload")

    def __init__(self, size: int) -> None:
        if size < 1:
            raise ValueError(f"size must be >= 1, got {size}")
        self.size = size
        self._score = [0] * (size + 1)
        self._payload = [-1] * (size + 1)

    def insert(self, key: int, score: int, payload: int = -1) -> None:
        if not 1 <= key <= self.size:
            raise ValueError(f"key must be in 1..{self.size}, got {key}")
        score_arr, payload_arr = self._score, self._payload
        while key <= self.size:
            if score > score_arr[key]:
                score_arr[key] = score
                payload_arr[key] = payload
            key += key & (-key)

    def prefix_max(self, key: int) -> int:
        """Best score among keys <= key; 0 if none inserted."""
        return self.prefix_argmax(key)[0]

    def prefix_argmax(self, key: int) -> tuple[int, int]:
        """(best score, its payload) among keys <= key; (0, -1) if none."""
        if key > self.size:
            key = self.size
        best, arg = 0, -1
        score_arr, payload_arr = self._score, self._payload
        while key > 0:
            if score_arr[key] > best:
                best = score_arr[key]
                arg = payload_arr[key]
            key -= key & (-key)
        return best, arg
