"""Buffered look-ahead engine with access/matching/replacement accounting.

The input list is never rearranged. Serving a request from the list at
position i costs i and triggers three bookkeeping steps over the next i
requests (the look-ahead window):

  1. parallel matching: offset k is a match when the k-th list element
     equals the k-th upcoming request; each match costs 1;
  2. matched elements are stored in a fixed-capacity buffer with FIFO
     replacement, each eviction costing 1;
  3. every window position whose element now sits in the buffer gets a
     flag.

A flagged request whose element still occupies buffer slot p is served
from the buffer at cost p instead of from the list. Total cost is
access + matching + replacement.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ListConfig, RequestSequence, Workload, position, require_valid
from .costs import CostBreakdown


@dataclass(frozen=True)
class LookaheadWindow:
    """Request positions start..end inclusive; end < start means empty."""

    start: int
    end: int

    def positions(self) -> range:
        return range(self.start, self.end + 1)


def lookahead_window(t: int, i: int, n: int) -> LookaheadWindow:
    """Window of the next i requests after position t, truncated at n."""
    return LookaheadWindow(t + 1, min(t + i, n))


class Buffer:
    """Fixed-capacity slotted store with FIFO eviction.

    Slots are numbered from 1 and a resident element is served at a cost
    equal to its slot number. When full, the entry with the oldest
    insertion is evicted and the newcomer takes over its slot, so slot
    numbers of the surviving entries never shift.
    """

    def __init__(self, capacity: int):
        if capacity < 0:
            raise ValueError(f"capacity must be >= 0, got {capacity}")
        self.capacity = capacity
        self.slots: list[tuple[str, int] | None] = [None] * capacity
        self._next_seq = 1

    def slot_of(self, element: str) -> int | None:
        for idx, entry in enumerate(self.slots):
            if entry is not None and entry[0] == element:
                return idx + 1
        return None

    def occupants(self) -> set[str]:
        return {entry[0] for entry in self.slots if entry is not None}

    def occupancy(self) -> int:
        return sum(entry is not None for entry in self.slots)

    def place(self, element: str) -> tuple[int, tuple[int, str] | None]:
        """Insert into the lowest free slot, evicting FIFO when full.

        Returns (slot, evicted) where evicted is (slot, element) of the
        removed entry or None. Callers must cap the insertion batch to
        the capacity first; capacity 0 never reaches here.
        """
        for idx, entry in enumerate(self.slots):
            if entry is None:
                self.slots[idx] = (element, self._next_seq)
                self._next_seq += 1
                return idx + 1, None
        idx = min(range(self.capacity), key=lambda j: self.slots[j][1])
        evicted = (idx + 1, self.slots[idx][0])
        self.slots[idx] = (element, self._next_seq)
        self._next_seq += 1
        return idx + 1, evicted


def match_parallel(
    lst: ListConfig, i: int, requests: RequestSequence, t: int
) -> list[tuple[int, str]]:
    """Positional matches of the visited prefix against the window.

    Returns every offset k in 1..min(i, n-t) where the k-th list element
    equals request t+k, in increasing k. The comparison is element-wise,
    not a set intersection: list element k is only ever compared with
    the single request k steps ahead.
    """
    limit = min(i, requests.n - t)
    out: list[tuple[int, str]] = []
    for k in range(1, limit + 1):
        e = lst.elements[k - 1]
        if e == requests.requests[t + k - 1]:
            out.append((k, e))
    return out


def buffer_insert(
    buffer: Buffer, candidates: list[tuple[int, str]]
) -> tuple[list[tuple[int, str]], list[tuple[int, str]], int]:
    """Store matched elements, preferring higher list positions on overflow.

    Candidates already resident are dropped first (no cost). If more
    remain than the total capacity, only the `capacity` candidates with
    the largest list positions are kept. Survivors are inserted in
    increasing list-position order via Buffer.place.

    Returns (inserted, evicted, replacement_count) where inserted and
    evicted are (slot, element) pairs and replacement_count counts
    evictions of pre-existing entries.
    """
    resident = buffer.occupants()
    fresh = [(k, e) for k, e in candidates if e not in resident]
    if len(fresh) > buffer.capacity:
        keep = sorted(fresh, key=lambda ke: ke[0], reverse=True)[: buffer.capacity]
        kept_ks = {k for k, _ in keep}
        fresh = [(k, e) for k, e in fresh if k in kept_ks]
    inserted: list[tuple[int, str]] = []
    evicted: list[tuple[int, str]] = []
    for _, e in fresh:
        slot, out = buffer.place(e)
        inserted.append((slot, e))
        if out is not None:
            evicted.append(out)
    return inserted, evicted, len(evicted)


def set_flags(
    flags: set[int], window: LookaheadWindow, buffer: Buffer, requests: RequestSequence
) -> list[int]:
    """Flag every window position whose element currently sits in the buffer.

    All buffer residents count, not just this step's insertions. Returns
    the positions scanned into the table this step; re-flagging an
    already flagged position is a no-op on the table but still reported.
    """
    resident = buffer.occupants()
    touched: list[int] = []
    for j in window.positions():
        if requests.requests[j - 1] in resident:
            flags.add(j)
            touched.append(j)
    return touched


@dataclass(frozen=True)
class AmrStepEvent:
    """One served request: a list access with its bookkeeping, or a buffer hit."""

    t: int
    element: str
    source: str  # "list" | "buffer"
    position: int  # list position or buffer slot
    access_cost: int
    matched: tuple[tuple[int, str], ...] = ()
    inserted: tuple[tuple[int, str], ...] = ()
    evicted: tuple[tuple[int, str], ...] = ()
    flags_added: tuple[int, ...] = ()


def serve_amr(workload: Workload) -> tuple[CostBreakdown, list[AmrStepEvent]]:
    """Serve the whole request sequence under the buffered look-ahead rules.

    A flag is honored only while its element still occupies a buffer
    slot; if the element was evicted in the meantime the request falls
    back to a plain list access, matching and flagging included. An
    unflagged request is always served from the list, even when its
    element happens to be buffered.
    """
    require_valid(workload)
    lst = workload.list
    requests = workload.requests
    buffer = Buffer(workload.buffer_capacity)
    flags: set[int] = set()
    access = matching = replacement = 0
    trace: list[AmrStepEvent] = []
    for t in range(1, requests.n + 1):
        x = requests.requests[t - 1]
        slot = buffer.slot_of(x) if t in flags else None
        if slot is not None:
            access += slot
            trace.append(AmrStepEvent(t, x, "buffer", slot, slot))
            continue
        i = position(lst, x)
        access += i
        matched = match_parallel(lst, i, requests, t)
        matching += len(matched)
        inserted, evicted, replaced = buffer_insert(buffer, matched)
        replacement += replaced
        window = lookahead_window(t, i, requests.n)
        touched = set_flags(flags, window, buffer, requests)
        trace.append(
            AmrStepEvent(
                t,
                x,
                "list",
                i,
                i,
                tuple(matched),
                tuple(inserted),
                tuple(evicted),
                tuple(touched),
            )
        )
    breakdown = CostBreakdown(access=access, matching=matching, replacement=replacement)
    return breakdown, trace
