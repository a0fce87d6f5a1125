"""Permutation kernel: cycles, cyclic/linear orders, pair partitions, crossings.

Ground sets are arbitrary finite sets of mutually comparable identifiers
(integers in most internal uses, face identifiers of a surface at the
package boundary).  A permutation is stored as an image array over the
sorted ground set, so all cycle arithmetic runs on small integer indices.

Composition is written apply-right-first throughout: ``compose(p, q)`` maps
``x`` to ``p(q(x))``.
"""

from __future__ import annotations

import itertools
import re

from .errors import GroundSetError


class Permutation:
    """A bijection on a finite ground set."""

    __slots__ = ("domain", "_img", "_pos")

    def __init__(self, domain, images):
        domain = tuple(domain)
        images = tuple(images)
        if any(domain[i] >= domain[i + 1] for i in range(len(domain) - 1)):
            raise GroundSetError("ground set must be strictly sorted")
        m = len(domain)
        if len(images) != m or set(images) != set(range(m)):
            raise GroundSetError("images do not form a bijection on the ground set")
        self.domain = domain
        self._img = images
        self._pos = None

    @classmethod
    def from_mapping(cls, mapping):
        """Build from a dict ``element -> image`` covering the ground set."""
        domain = sorted(mapping)
        pos = {x: i for i, x in enumerate(domain)}
        try:
            images = tuple(pos[mapping[x]] for x in domain)
        except KeyError as exc:
            raise GroundSetError(
                f"image {exc.args[0]!r} is outside the ground set") from None
        return cls(domain, images)

    @classmethod
    def from_cycles(cls, cycles, ground=None):
        """Build from disjoint cycles; unmentioned ground elements are fixed."""
        seen = set()
        cycles = [tuple(c) for c in cycles]
        for c in cycles:
            for x in c:
                if x in seen:
                    raise GroundSetError(f"element {x!r} appears in more than one cycle")
                seen.add(x)
        if ground is None:
            domain = tuple(sorted(seen))
        else:
            domain = tuple(sorted(set(ground)))
            extra = seen.difference(domain)
            if extra:
                raise GroundSetError(
                    f"cycle elements {sorted(extra)!r} are outside the ground set")
        pos = {x: i for i, x in enumerate(domain)}
        images = list(range(len(domain)))
        for c in cycles:
            for a, b in zip(c, c[1:] + c[:1]):
                images[pos[a]] = pos[b]
        return cls(domain, tuple(images))

    @classmethod
    def identity(cls, ground):
        domain = tuple(sorted(set(ground)))
        return cls(domain, tuple(range(len(domain))))

    def _position(self, x):
        pos = self._pos
        if pos is None:
            pos = {e: i for i, e in enumerate(self.domain)}
            self._pos = pos
        try:
            return pos[x]
        except KeyError:
            raise GroundSetError(f"element {x!r} is not in the ground set") from None

    def __call__(self, x):
        return self.domain[self._img[self._position(x)]]

    def __len__(self):
        return len(self.domain)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.domain == other.domain and self._img == other._img

    def __hash__(self):
        return hash((self.domain, self._img))

    def __repr__(self):
        return f"<{type(self).__name__} {format_cycles(self)}>"

    def inverse(self):
        img = self._img
        out = [0] * len(img)
        for i, j in enumerate(img):
            out[j] = i
        return Permutation(self.domain, tuple(out))

    def is_involution(self):
        img = self._img
        return all(img[img[i]] == i for i in range(len(img)))

    def is_fixed_point_free(self):
        img = self._img
        return all(img[i] != i for i in range(len(img)))


class CyclicOrder(Permutation):
    """A permutation consisting of exactly one cycle through the whole ground set."""

    __slots__ = ()

    def __init__(self, domain, images):
        super().__init__(domain, images)
        m = len(self.domain)
        if m:
            seen = 1
            i = self._img[0]
            while i != 0:
                seen += 1
                i = self._img[i]
            if seen != m:
                raise GroundSetError("not a single full-length cycle")

    @classmethod
    def from_sequence(cls, seq):
        """Cyclic order sending each entry of ``seq`` to the next, wrapping around."""
        seq = tuple(seq)
        if len(set(seq)) != len(seq):
            raise GroundSetError("sequence repeats elements")
        domain = tuple(sorted(seq))
        pos = {x: i for i, x in enumerate(domain)}
        images = [0] * len(seq)
        for a, b in zip(seq, seq[1:] + seq[:1]):
            images[pos[a]] = pos[b]
        return cls(domain, tuple(images))


class PairPartition:
    """A partition of a finite set into unordered two-element blocks."""

    __slots__ = ("pairs", "_partner")

    def __init__(self, pairs):
        partner = {}
        norm = []
        for block in pairs:
            items = sorted(block)
            if len(items) != 2:
                raise GroundSetError(f"block {items!r} does not have exactly two elements")
            a, b = items
            if a == b:
                raise GroundSetError(f"block repeats the element {a!r}")
            if a in partner or b in partner:
                raise GroundSetError("blocks are not disjoint")
            partner[a] = b
            partner[b] = a
            norm.append((a, b))
        self.pairs = tuple(sorted(norm))
        self._partner = partner

    @classmethod
    def from_involution(cls, rho):
        """The orbit partition of a fixed-point-free involution."""
        if not (rho.is_involution() and rho.is_fixed_point_free()):
            raise GroundSetError("expected a fixed-point-free involution")
        return cls(cycles_of(rho))

    @property
    def ground(self):
        return tuple(sorted(self._partner))

    def partner(self, x):
        try:
            return self._partner[x]
        except KeyError:
            raise GroundSetError(f"element {x!r} is not in the ground set") from None

    def to_involution(self):
        return Permutation.from_mapping(self._partner)

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __eq__(self, other):
        if not isinstance(other, PairPartition):
            return NotImplemented
        return self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __repr__(self):
        return f"<PairPartition {self.pairs!r}>"


def compose(p, q):
    """The product ``p`` after ``q``: ``compose(p, q)(x) == p(q(x))``."""
    if p.domain != q.domain:
        raise GroundSetError("ground sets differ")
    pi = p._img
    qi = q._img
    return Permutation(p.domain, tuple(pi[j] for j in qi))


def cycles_of(p):
    """Disjoint cycles, each starting at its smallest element, sorted by it.

    Fixed points are included as length-1 cycles.
    """
    img = p._img
    dom = p.domain
    seen = [False] * len(dom)
    out = []
    for i in range(len(dom)):
        if seen[i]:
            continue
        cyc = [i]
        seen[i] = True
        j = img[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = img[j]
        out.append(tuple(dom[k] for k in cyc))
    return out


def cycle_count(p):
    """Number of cycles of ``p``, fixed points included."""
    img = p._img
    seen = [False] * len(img)
    count = 0
    for i in range(len(img)):
        if seen[i]:
            continue
        count += 1
        j = i
        while not seen[j]:
            seen[j] = True
            j = img[j]
    return count


def fixed_points(p):
    """Sorted list of elements mapped to themselves."""
    img = p._img
    return [p.domain[i] for i in range(len(img)) if img[i] == i]


def format_cycles(p):
    """Canonical cycle-notation text, e.g. ``(1,4)(2,7)(3,6)(5,8)``."""
    cycles = cycles_of(p)
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(x) for x in c) + ")" for c in cycles)


_CYCLE_BODY = re.compile(r"\(([^()]*)\)")


def parse_cycles(text, ground=None):
    """Parse cycle-notation text; whitespace between tokens is ignored.

    Tokens consisting of digits become integers, anything else stays a
    string.  ``ground`` supplies fixed points that the text omits.
    """
    body = _CYCLE_BODY.findall(text)
    leftover = _CYCLE_BODY.sub("", text).strip()
    if leftover:
        raise GroundSetError(f"unexpected text {leftover!r} in cycle notation")
    cycles = []
    for part in body:
        tokens = [t.strip() for t in part.split(",") if t.strip()]
        if not tokens:
            continue
        cycles.append(tuple(int(t) if t.isdigit() else t for t in tokens))
    return Permutation.from_cycles(cycles, ground=ground)


def induced_cyclic(order):
    """Cyclic order of a linear order: each element maps to its successor."""
    seq = tuple(order)
    if not seq:
        raise GroundSetError("cannot induce a cyclic order from an empty sequence")
    return CyclicOrder.from_sequence(seq)


def induced_linear(cyclic, base):
    """Cut a cyclic order at ``base``: ``[base, c(base), c²(base), ...]``."""
    out = [base]
    x = cyclic(base)
    while x != base:
        out.append(x)
        x = cyclic(x)
    return out


def _check_order_against(partition, order):
    seq = tuple(order)
    if len(set(seq)) != len(seq):
        raise GroundSetError("order repeats elements")
    if sorted(seq) != list(partition.ground):
        raise GroundSetError("order and partition cover different ground sets")
    return seq


def is_intersection_free_linear(partition, order, method="stack"):
    """True iff no two blocks of ``partition`` interleave along ``order``.

    ``method="stack"`` is the linear-time nesting check; ``method="pairs"``
    is the quadratic scan straight from the definition.  Both always agree.
    """
    seq = _check_order_against(partition, order)
    if method == "stack":
        part = partition._partner
        stack = []
        opened = set()
        for x in seq:
            p = part[x]
            if p in opened:
                if stack[-1] != p:
                    return False
                stack.pop()
                opened.remove(p)
            else:
                stack.append(x)
                opened.add(x)
        return True
    if method == "pairs":
        pos = {x: i for i, x in enumerate(seq)}
        spans = sorted((min(pos[a], pos[b]), max(pos[a], pos[b]))
                       for a, b in partition.pairs)
        for (a1, a2), (b1, b2) in itertools.combinations(spans, 2):
            if a1 < b1 < a2 < b2:
                return False
        return True
    raise ValueError(f"unknown method {method!r}")


def is_intersection_free_cyclic(partition, order, method="literal"):
    """True iff no two blocks of ``partition`` interleave around ``order``.

    ``method="literal"`` quantifies over a start element and the three
    distances of the definition; it is the reference answer.
    ``method="linear"`` cuts the cycle once and runs the nesting check.
    """
    dom = order.domain
    if tuple(partition.ground) != dom:
        raise GroundSetError("order and partition cover different ground sets")
    if method == "linear":
        if not dom:
            return True
        return is_intersection_free_linear(partition, induced_linear(order, dom[0]))
    if method != "literal":
        raise ValueError(f"unknown method {method!r}")
    m = len(dom)
    if m <= 2:
        return True
    img = order._img
    pos = {e: i for i, e in enumerate(dom)}
    pidx = tuple(pos[partition._partner[e]] for e in dom)
    walk = [0] * m
    back = [0] * m
    for s in range(m):
        cur = s
        for t in range(m):
            walk[t] = cur
            back[cur] = t
            cur = img[cur]
        j = back[pidx[s]]
        for i in range(1, j):
            if back[pidx[walk[i]]] > j:
                return False
    return True


def cycle_count_criterion(sigma, rho):
    """True iff ``rho∘sigma`` has exactly ``n+1`` cycles on ``2n`` elements."""
    if sigma.domain != rho.domain:
        raise GroundSetError("ground sets differ")
    m = len(sigma.domain)
    if m % 2:
        raise GroundSetError("ground set size must be even")
    if not (rho.is_involution() and rho.is_fixed_point_free()):
        raise GroundSetError("rho must be a fixed-point-free involution")
    return cycle_count(compose(rho, sigma)) == m // 2 + 1


def reduct(sigma, rho, f):
    """Remove the block ``{f, sigma(f)}`` at a fixed point ``f`` of ``rho∘sigma``.

    Returns the shortened cyclic order and the restricted involution.  The
    new cyclic order routes around the removed block: an element whose
    successor was ``f`` now jumps three steps.
    """
    if sigma.domain != rho.domain:
        raise GroundSetError("ground sets differ")
    if not (rho.is_involution() and rho.is_fixed_point_free()):
        raise GroundSetError("rho must be a fixed-point-free involution")
    if len(sigma.domain) <= 2:
        raise GroundSetError("reduct requires more than one block")
    g = sigma(f)
    if rho(g) != f:
        raise GroundSetError(f"{f!r} is not a fixed point of the product")
    removed = {f, g}
    sig = {}
    for k in sigma.domain:
        if k in removed:
            continue
        nxt = sigma(k)
        sig[k] = sigma(sigma(nxt)) if nxt == f else nxt
    rho_hat = {k: rho(k) for k in sigma.domain if k not in removed}
    return CyclicOrder.from_mapping(sig), Permutation.from_mapping(rho_hat)
