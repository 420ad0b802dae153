"""Binary min-heap over dense integer keys with a position index."""

from __future__ import annotations

from typing import Iterable


class IndexedMinHeap:
    """Min-heap of ``(key, value)`` pairs, keys being ints in ``range(capacity)``.

    Ordered by value, ties broken by the smaller key, so pops are fully
    deterministic.  ``update`` moves an entry up or down after its value
    changed.
    """

    __slots__ = ("keys", "vals", "pos")

    def __init__(self, capacity: int, items: Iterable[tuple[int, float]] = ()):
        self.keys: list[int] = []
        self.vals: list[float] = []
        self.pos = [-1] * capacity
        self.build(items)

    def build(self, items: Iterable[tuple[int, float]]) -> None:
        for key, value in items:
            if self.pos[key] != -1:
                raise KeyError(f"duplicate key {key}")
            self.pos[key] = len(self.keys)
            self.keys.append(key)
            self.vals.append(value)
        for i in range(len(self.keys) // 2 - 1, -1, -1):
            self._down(i)

    def __len__(self) -> int:
        return len(self.keys)

    def __bool__(self) -> bool:
        return bool(self.keys)

    def __contains__(self, key: int) -> bool:
        return self.pos[key] != -1

    def value(self, key: int) -> float:
        i = self.pos[key]
        if i < 0:
            raise KeyError(key)
        return self.vals[i]

    def peek(self) -> tuple[int, float]:
        if not self.keys:
            raise IndexError("peek into an empty heap")
        return self.keys[0], self.vals[0]

    def push(self, key: int, value: float) -> None:
        if self.pos[key] != -1:
            raise KeyError(f"duplicate key {key}")
        i = len(self.keys)
        self.keys.append(key)
        self.vals.append(value)
        self.pos[key] = i
        self._up(i)

    def pop(self) -> tuple[int, float]:
        keys, vals = self.keys, self.vals
        if not keys:
            raise IndexError("pop from an empty heap")
        key, value = keys[0], vals[0]
        last_k, last_v = keys.pop(), vals.pop()
        self.pos[key] = -1
        if keys:
            keys[0], vals[0] = last_k, last_v
            self.pos[last_k] = 0
            self._down(0)
        return key, value

    def update(self, key: int, value: float) -> None:
        i = self.pos[key]
        if i < 0:
            raise KeyError(key)
        old = self.vals[i]
        self.vals[i] = value
        if value < old:
            self._up(i)
        elif value > old:
            self._down(i)

    def _up(self, i: int) -> None:
        keys, vals, pos = self.keys, self.vals, self.pos
        key, val = keys[i], vals[i]
        while i > 0:
            parent = (i - 1) >> 1
            pv = vals[parent]
            if pv < val or (pv == val and keys[parent] < key):
                break
            pk = keys[parent]
            keys[i], vals[i] = pk, pv
            pos[pk] = i
            i = parent
        keys[i], vals[i] = key, val
        pos[key] = i

    def _down(self, i: int) -> None:
        keys, vals, pos = self.keys, self.vals, self.pos
        size = len(keys)
        key, val = keys[i], vals[i]
        while True:
            child = 2 * i + 1
            if child >= size:
                break
            cv, ck = vals[child], keys[child]
            right = child + 1
            if right < size:
                rv = vals[right]
                if rv < cv or (rv == cv and keys[right] < ck):
                    child, cv, ck = right, rv, keys[right]
            if val < cv or (val == cv and key < ck):
                break
            keys[i], vals[i] = ck, cv
            pos[ck] = i
            i = child
        keys[i], vals[i] = key, val
        pos[key] = i

    def is_valid(self) -> bool:
        """Heap order and position index consistency (for tests)."""
        keys, vals = self.keys, self.vals
        for i in range(1, len(keys)):
            p = (i - 1) >> 1
            if (vals[i], keys[i]) < (vals[p], keys[p]):
                return False
        return all(self.pos[k] == i for i, k in enumerate(keys)) and sum(
            1 for x in self.pos if x != -1
        ) == len(keys)
