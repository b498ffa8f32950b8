"""Step-labeled paths and the bijections between weighted path families.

A labeled path is a tuple of tokens.  Plain tokens u, d, h, v are ordinary
steps; d1/d2, h1/h2, v1/v2 carry a weight-splitting label and dy marks a
d step carrying the indeterminate weight.  The text encoding joins tokens
with dots ("u.d1.u.u.v1.v1"); the empty path encodes as "".

Most maps here are sign-reversing involutions driven by one shared engine:
find the last occurrence (maximal starting index) of any factor from a
fixed swap table and replace it by its partner.  Elements with no factor
occurrence are the exceptional set, which each family also characterizes
structurally; applying a swap map to an exceptional element raises
ExceptionalElement.

The remaining maps are structural: varphi toggles the last return step
between d and v, hat_varphi rewrites labeled Dyck paths into d-marked
paths, chi1 exchanges the two encodings of h-vs-vu weighted paths, and
chi2 (with explicit inverse) recursively converts label-weighted Dyck
paths into high-h-weighted paths.

check_bijection exhaustively certifies a map at one size: it enumerates
the labeled domain, applies the map everywhere, and confirms membership,
injectivity, surjectivity (by cardinality), the involution or explicit
inverse roundtrip, and the tracked-statistic property.
"""

from __future__ import annotations

import itertools
import time

from gmotzkin.paths import (
    PathError,
    STEP_RISE,
    check_steps,
    iter_path_strings,
    iter_path_strings_with_d_count,
)

TOKENS = frozenset(
    {"u", "d", "h", "v", "d1", "d2", "h1", "h2", "v1", "v2", "dy"}
)

BIJECTION_NAMES = (
    "phi",
    "tau",
    "tau_bar",
    "varphi",
    "varphi_bar",
    "hat_varphi",
    "theta",
    "chi1",
    "chi2",
    "chi2_inv",
    "rho",
)

CHECK_CAP = 8


class BijectionError(ValueError):
    pass


class DomainViolation(BijectionError):
    pass


class ExceptionalElement(DomainViolation):
    """Raised when a swap map is applied to an element it cannot move."""


def decode(text: str):
    if text == "":
        return ()
    tokens = tuple(text.split("."))
    for t in tokens:
        if t not in TOKENS:
            raise DomainViolation(f"unknown token {t!r}")
    return tokens


def encode(tokens) -> str:
    return ".".join(tokens)


def base_step(token: str) -> str:
    return token[0]


def underlying(tokens) -> str:
    return "".join(base_step(t) for t in tokens)


def token_heights(tokens):
    """Height before each token."""
    out = []
    h = 0
    for t in tokens:
        out.append(h)
        h += STEP_RISE[base_step(t)]
    return out


def x_length(tokens) -> int:
    return sum(1 for t in tokens if base_step(t) != "v")


def count_base(tokens, step: str) -> int:
    return sum(1 for t in tokens if base_step(t) == step)


def high_h_count(tokens) -> int:
    heights = token_heights(tokens)
    return sum(
        1 for t, a in zip(tokens, heights) if base_step(t) == "h" and a >= 1
    )


# ---------------------------------------------------------------------------
# Domain validators


def _validate_shape(tokens) -> None:
    try:
        check_steps(underlying(tokens))
    except PathError as exc:
        raise DomainViolation(str(exc)) from None


def _validate_alphabet(tokens, allowed, family: str) -> None:
    for t in tokens:
        if t not in allowed:
            raise DomainViolation(f"{family}: token {t!r} not allowed")


def validate_plain(tokens) -> None:
    _validate_alphabet(tokens, {"u", "d", "h", "v"}, "plain path")
    _validate_shape(tokens)


def validate_h_labeled(tokens) -> None:
    """Paths whose h steps all carry a 1/2 label."""
    _validate_alphabet(tokens, {"u", "d", "v", "h1", "h2"}, "h-labeled path")
    _validate_shape(tokens)


def validate_d_labeled(tokens) -> None:
    """Paths whose d steps all carry a 1/2 label."""
    _validate_alphabet(tokens, {"u", "h", "v", "d1", "d2"}, "d-labeled path")
    _validate_shape(tokens)


def validate_dv_labeled(tokens) -> None:
    """Paths whose d steps and v steps all carry 1/2 labels."""
    _validate_alphabet(
        tokens, {"u", "h", "d1", "d2", "v1", "v2"}, "d,v-labeled path"
    )
    _validate_shape(tokens)


def validate_lh(tokens) -> None:
    """High-h-weighted encoding: h at positive level is h1/h2, at level 0 h1."""
    _validate_alphabet(tokens, {"u", "d", "v", "h1", "h2"}, "h-weighted path")
    _validate_shape(tokens)
    for t, a in zip(tokens, token_heights(tokens)):
        if t == "h2" and a == 0:
            raise DomainViolation("h-weighted path: h2 cannot sit at level 0")


def validate_lvu(tokens) -> None:
    """vu-weighted encoding: every v immediately before a u is v1/v2."""
    _validate_alphabet(tokens, {"u", "d", "h", "v", "v1", "v2"}, "vu-weighted path")
    _validate_shape(tokens)
    for j, t in enumerate(tokens):
        before_u = j + 1 < len(tokens) and tokens[j + 1] == "u"
        if t in ("v1", "v2") and not before_u:
            raise DomainViolation("vu-weighted path: labeled v must precede a u")
        if t == "v" and before_u:
            raise DomainViolation("vu-weighted path: v before u must carry a label")


def validate_lh_or_lvu(tokens) -> None:
    try:
        validate_lh(tokens)
        return
    except DomainViolation as first:
        try:
            validate_lvu(tokens)
            return
        except DomainViolation as second:
            raise DomainViolation(f"{first}; {second}") from None


def validate_dyck_d_labeled(tokens) -> None:
    """Dyck paths over u and labeled d1/d2 steps."""
    _validate_alphabet(tokens, {"u", "d1", "d2"}, "labeled Dyck path")
    _validate_shape(tokens)


def validate_dyck_peak_labeled(tokens) -> None:
    """Dyck paths with every d labeled dy/d1/d2, d2 only closing a peak."""
    _validate_alphabet(tokens, {"u", "dy", "d1", "d2"}, "peak-labeled Dyck path")
    _validate_shape(tokens)
    for j, t in enumerate(tokens):
        if t == "d2" and (j == 0 or tokens[j - 1] != "u"):
            raise DomainViolation("peak-labeled Dyck path: d2 must follow a u")


def validate_marked_d(tokens) -> None:
    """Paths whose d steps are all written dy (the d-marked family)."""
    _validate_alphabet(tokens, {"u", "h", "v", "dy"}, "d-marked path")
    _validate_shape(tokens)


# ---------------------------------------------------------------------------
# Factor-swap engine

_SWAP_TABLES = {
    "phi": ((("d",), ("h1", "v")), (("h2",), ("u", "v"))),
    "tau": ((("d1",), ("u", "v", "v")), (("d2",), ("h", "v"))),
    "tau_bar": ((("d",), ("h", "v")),),
    "varphi_bar": ((("h",), ("u", "d1")), (("d2",), ("v",))),
    "theta": (
        (("h",), ("u", "v2")),
        (("d1",), ("u", "v1", "v1")),
        (("d2",), ("u", "v1", "v2")),
    ),
    "rho": ((("h1", "v"), ("u", "v", "v")), (("h2", "v"), ("d",))),
}


def _partner_map(pairs):
    partner = {}
    for a, b in pairs:
        partner[a] = b
        partner[b] = a
    # longer factors matched first at equal start positions
    patterns = sorted(partner, key=len, reverse=True)
    return partner, patterns


_PARTNERS = {name: _partner_map(pairs) for name, pairs in _SWAP_TABLES.items()}


def find_last_factor(tokens, family: str):
    """Maximal starting index of any swap factor, or None."""
    _, patterns = _PARTNERS[family]
    found = None
    for start in range(len(tokens)):
        for pat in patterns:
            if tuple(tokens[start : start + len(pat)]) == pat:
                found = (start, pat)
                break
    return found


def _swap_last(tokens, family: str):
    partner, _ = _PARTNERS[family]
    hit = find_last_factor(tokens, family)
    if hit is None:
        raise ExceptionalElement(f"{family}: no factor occurrence to swap")
    start, pat = hit
    return tuple(tokens[:start]) + partner[pat] + tuple(tokens[start + len(pat) :])


# ---------------------------------------------------------------------------
# Structural maps


def _apply_varphi(tokens):
    last = None
    height = 0
    for j, t in enumerate(tokens):
        height += STEP_RISE[t]
        if height == 0 and t in ("d", "v"):
            last = j
    if last is None:
        raise ExceptionalElement("varphi: no return step; path is all h steps")
    swapped = "v" if tokens[last] == "d" else "d"
    return tuple(tokens[:last]) + (swapped,) + tuple(tokens[last + 1 :])


def _apply_chi1(tokens):
    heights = token_heights(tokens)
    out = []
    i = 0
    while i < len(tokens):
        t = tokens[i]
        nxt = tokens[i + 1] if i + 1 < len(tokens) else None
        if t in ("h1", "h2"):
            if heights[i] >= 1:
                out.append("v1" if t == "h1" else "v2")
                out.append("u")
            else:
                out.append("h")
            i += 1
        elif t == "h":
            if heights[i] >= 1:
                out.append("v")
                out.append("u")
            else:
                out.append("h1")
            i += 1
        elif t in ("v1", "v2") and nxt == "u":
            out.append("h1" if t == "v1" else "h2")
            i += 2
        elif t == "v" and nxt == "u":
            out.append("h")
            i += 2
        else:
            out.append(t)
            i += 1
    return tuple(out)


def _apply_hat_varphi(tokens):
    out = []
    i = 0
    while i < len(tokens):
        t = tokens[i]
        if t == "u" and i + 1 < len(tokens) and tokens[i + 1] == "d2":
            out.append("h")
            i += 2
        elif t == "d1":
            out.append("v")
            i += 1
        else:  # u not opening a d2 peak, or dy
            out.append(t)
            i += 1
    return tuple(out)


# chi2: recursion over the primitive (first-passage) parts of a Dyck path.


def _blocks(tokens):
    """Split a balanced token list at every return to height 0."""
    blocks = []
    height = 0
    start = 0
    for j, t in enumerate(tokens):
        height += STEP_RISE[base_step(t)]
        if height == 0:
            blocks.append(tuple(tokens[start : j + 1]))
            start = j + 1
    return blocks


def _chi2(tokens):
    out = []
    for part in _blocks(tokens):
        out.extend(_chi2_primitive(part))
    return out


def _chi2_primitive(part):
    if len(part) == 2:
        return ["h1"] if part[1] == "d1" else ["u", "v"]
    interior = part[1:-1]
    if part[-1] == "d2":
        return ["u"] + _chi2(interior) + ["v"]
    parts = _blocks(interior)
    d2_positions = [k for k, p in enumerate(parts) if p[-1] == "d2"]
    if not d2_positions:
        # every return of the interior is d1
        out = ["u"]
        for k, p in enumerate(parts):
            if k:
                out.append("h2")
            out.extend(_chi2(p[1:-1]))
        out.append("d")
        return out
    last_d2 = d2_positions[-1]
    if last_d2 < len(parts) - 1:
        # trailing run of d1-closed parts after the last d2-closed one
        split = last_d2 + 1
    else:
        # trailing run of d2-closed parts
        split = len(parts) - 1
        while split > 0 and parts[split - 1][-1] == "d2":
            split -= 1
    out = ["u"]
    for p in parts[:split]:
        out.extend(_chi2_primitive(p))
    for p in parts[split:]:
        out.append("h2")
        out.extend(_chi2(p[1:-1]))
    out.append("v")
    return out


def _chi2_inv(tokens):
    out = []
    for block in _blocks(tokens):
        out.extend(_chi2_inv_block(block))
    return out


def _split_at(tokens, positions):
    chunks = []
    prev = None
    for pos in positions:
        if prev is not None:
            chunks.append(tuple(tokens[prev + 1 : pos]))
        prev = pos
    chunks.append(tuple(tokens[prev + 1 :]))
    return chunks


def _chi2_inv_block(block):
    if block == ("h1",):
        return ["u", "d1"]
    closer = block[-1]
    heights = token_heights(block)
    seps = [
        j
        for j in range(1, len(block) - 1)
        if block[j] == "h2" and heights[j] == 1
    ]
    if closer == "d":
        chunks = _split_at(block[1:-1], [-1] + [s - 1 for s in seps])
        out = ["u"]
        for chunk in chunks:
            out.append("u")
            out.extend(_chi2_inv(chunk))
            out.append("d1")
        out.append("d1")
        return out
    if not seps:
        return ["u"] + _chi2_inv(block[1:-1]) + ["d2"]
    head = tuple(block[1 : seps[0]])
    chunks = _split_at(block[1:-1], [s - 1 for s in seps])
    # the closer labels depend on the shape of the part before the first
    # separator: a part ending with v whose last block has no h2 one level
    # up signals the mixed split, everything else the uniform one
    mixed = False
    if head and base_step(head[-1]) == "v":
        last_part = _blocks(head)[-1]
        inner_heights = token_heights(last_part)
        mixed = not any(
            last_part[j] == "h2" and inner_heights[j] == 1
            for j in range(len(last_part))
        )
    label = "d1" if mixed else "d2"
    out = ["u"]
    out.extend(_chi2_inv(head))
    for chunk in chunks:
        out.append("u")
        out.extend(_chi2_inv(chunk))
        out.append(label)
    out.append("d1")
    return out


# ---------------------------------------------------------------------------
# Exceptional-set predicates


def _is_block_word(tokens, blocks) -> bool:
    i = 0
    while i < len(tokens):
        for blk in blocks:
            if tuple(tokens[i : i + len(blk)]) == blk:
                i += len(blk)
                break
        else:
            return False
    return True


def _exceptional_phi(tokens) -> bool:
    return all(t == "h1" for t in tokens)


def _exceptional_tau(tokens) -> bool:
    return _is_block_word(tokens, (("h",), ("u", "v")))


def _exceptional_tau_bar(tokens) -> bool:
    if any(t == "d" for t in tokens):
        return False
    return not any(
        tokens[j] == "h" and tokens[j + 1] == "v" for j in range(len(tokens) - 1)
    )


def _exceptional_varphi(tokens) -> bool:
    return all(t == "h" for t in tokens)


def _exceptional_varphi_bar(tokens) -> bool:
    return len(tokens) == 0


def _exceptional_theta(tokens) -> bool:
    return _is_block_word(tokens, (("u", "v1"),))


def _exceptional_rho(tokens) -> bool:
    return _is_block_word(tokens, (("h1",), ("u", "v")))


# ---------------------------------------------------------------------------
# Dispatch


def _swap_apply(family, validator):
    def run(tokens):
        validator(tokens)
        return _swap_last(tokens, family)

    return run


def _validated(validator, func):
    def run(tokens):
        validator(tokens)
        return func(tokens)

    return run


_APPLY = {
    "phi": _swap_apply("phi", validate_h_labeled),
    "tau": _swap_apply("tau", validate_d_labeled),
    "tau_bar": _swap_apply("tau_bar", validate_plain),
    "varphi": _validated(validate_plain, _apply_varphi),
    "varphi_bar": _swap_apply("varphi_bar", validate_d_labeled),
    "hat_varphi": _validated(validate_dyck_peak_labeled, _apply_hat_varphi),
    "theta": _swap_apply("theta", validate_dv_labeled),
    "chi1": _validated(validate_lh_or_lvu, _apply_chi1),
    "chi2": _validated(validate_dyck_d_labeled, lambda ts: tuple(_chi2(ts))),
    "chi2_inv": _validated(validate_lh, lambda ts: tuple(_chi2_inv(ts))),
    "rho": _swap_apply("rho", validate_lh),
}


def apply_bijection(name: str, tokens):
    """Apply a named map to a labeled path (a tuple of tokens)."""
    if name not in _APPLY:
        raise BijectionError(
            f"unknown bijection {name!r}; valid: {', '.join(BIJECTION_NAMES)}"
        )
    return _APPLY[name](tuple(tokens))


# ---------------------------------------------------------------------------
# Domain enumerators


def iter_dyck_strings(n: int):
    """All u/d Dyck words of semilength n."""
    stack = [("", n, 0)]
    while stack:
        prefix, ups, height = stack.pop()
        if ups == 0:
            yield prefix + "d" * height
            continue
        if height > 0:
            stack.append((prefix + "d", ups, height - 1))
        stack.append((prefix + "u", ups - 1, height + 1))


def _expand_positions(options):
    yield from itertools.product(*options)


def _label_by_step(path_str, choices):
    options = [choices.get(ch, (ch,)) for ch in path_str]
    return _expand_positions(options)


def _lh_variants(path_str):
    heights = []
    h = 0
    for ch in path_str:
        heights.append(h)
        h += STEP_RISE[ch]
    options = []
    for ch, a in zip(path_str, heights):
        if ch == "h":
            options.append(("h1", "h2") if a >= 1 else ("h1",))
        else:
            options.append((ch,))
    return _expand_positions(options)


def _lvu_variants(path_str):
    options = []
    for j, ch in enumerate(path_str):
        if ch == "v" and j + 1 < len(path_str) and path_str[j + 1] == "u":
            options.append(("v1", "v2"))
        else:
            options.append((ch,))
    return _expand_positions(options)


def _marked_lengths(n: int):
    # paths whose x-length minus d count equals n
    for i in range(n + 1):
        yield from iter_path_strings_with_d_count(n + i, i)


def iter_domain(name: str, n: int):
    """Enumerate the labeled domain of a named map at size n."""
    if name == "phi":
        for s in iter_path_strings(n):
            yield from _label_by_step(s, {"h": ("h1", "h2")})
    elif name in ("tau", "theta"):
        choices = {"d": ("d1", "d2")}
        if name == "theta":
            choices["v"] = ("v1", "v2")
        for s in iter_path_strings(n):
            yield from _label_by_step(s, choices)
    elif name == "tau_bar":
        for s in iter_path_strings(n):
            yield tuple(s)
    elif name == "varphi":
        for s in _marked_lengths(n):
            yield tuple(s)
    elif name == "varphi_bar":
        for s in _marked_lengths(n):
            yield from _label_by_step(s, {"d": ("d1", "d2")})
    elif name == "hat_varphi":
        for s in iter_dyck_strings(n):
            options = []
            for j, ch in enumerate(s):
                if ch == "u":
                    options.append(("u",))
                elif j > 0 and s[j - 1] == "u":
                    options.append(("dy", "d1", "d2"))
                else:
                    options.append(("dy", "d1"))
            yield from _expand_positions(options)
    elif name in ("chi2", "chi2_inv"):
        for s in iter_dyck_strings(n):
            yield from _label_by_step(s, {"d": ("d1", "d2")})
    elif name in ("rho", "lh"):
        for s in iter_path_strings(n):
            yield from _lh_variants(s)
    elif name == "lvu":
        for s in iter_path_strings(n):
            yield from _lvu_variants(s)
    elif name == "chi1":
        seen = set()
        for s in iter_path_strings(n):
            for tokens in _lh_variants(s):
                seen.add(tokens)
                yield tokens
            for tokens in _lvu_variants(s):
                if tokens not in seen:
                    yield tokens
    else:
        raise BijectionError(f"no domain enumerator for {name!r}")


# ---------------------------------------------------------------------------
# Exhaustive certification

_INVOLUTIONS = {
    # validator, tracked statistic, exceptional predicate, statistic mode
    "phi": (validate_h_labeled, lambda ts: count_base(ts, "h"), _exceptional_phi),
    "tau": (validate_d_labeled, lambda ts: count_base(ts, "d"), _exceptional_tau),
    "tau_bar": (validate_plain, lambda ts: count_base(ts, "d"), _exceptional_tau_bar),
    "varphi": (validate_plain, lambda ts: count_base(ts, "d"), _exceptional_varphi),
    "varphi_bar": (
        validate_d_labeled,
        lambda ts: count_base(ts, "d"),
        _exceptional_varphi_bar,
    ),
    "theta": (validate_dv_labeled, lambda ts: count_base(ts, "u"), _exceptional_theta),
    "rho": (validate_lh, high_h_count, _exceptional_rho),
}


def _chi1_index(tokens) -> int:
    # weight index: high h count in the h-encoding, labeled-vu count otherwise
    if _ok(validate_lh, tokens):
        return high_h_count(tokens)
    return sum(1 for t in tokens if t in ("v1", "v2"))


def _fail(name, n, start, element, reason, **extra):
    from gmotzkin.verify import VerificationReport

    counterexample = {"element": encode(element) if element is not None else None,
                      "reason": reason}
    counterexample.update(extra)
    return VerificationReport(
        id=name,
        range=f"n={n}",
        status="fail",
        counterexample=counterexample,
        elapsed_ms=(time.perf_counter() - start) * 1000.0,
        routes=("enumeration",),
    )


def _ok(validator, tokens) -> bool:
    try:
        validator(tokens)
        return True
    except DomainViolation:
        return False


def check_bijection(name: str, n: int):
    """Certify a named map exhaustively at size n; returns a report."""
    from gmotzkin.verify import VerificationReport

    if name not in _APPLY:
        raise BijectionError(
            f"unknown bijection {name!r}; valid: {', '.join(BIJECTION_NAMES)}"
        )
    if not 0 <= n <= CHECK_CAP:
        raise BijectionError(f"check size must satisfy 0 <= n <= {CHECK_CAP}")
    start = time.perf_counter()

    if name in _INVOLUTIONS:
        report = _check_involution(name, n, start)
    elif name == "chi1":
        report = _check_chi1(n, start)
    elif name in ("chi2", "chi2_inv"):
        report = _check_chi2(name, n, start)
    else:
        report = _check_hat_varphi(n, start)
    if report is not None:
        return report
    return VerificationReport(
        id=name,
        range=f"n={n}",
        status="pass",
        counterexample=None,
        elapsed_ms=(time.perf_counter() - start) * 1000.0,
        routes=("enumeration",),
    )


def _check_involution(name, n, start):
    validator, stat, exceptional = _INVOLUTIONS[name]
    raw = _apply_varphi if name == "varphi" else (
        lambda ts: _swap_last(ts, name)
    )
    size_check = (lambda ts: x_length(ts) - count_base(ts, "d") == n) if name in (
        "varphi",
        "varphi_bar",
    ) else (lambda ts: x_length(ts) == n)
    total = 0
    exceptional_count = 0
    images = set()
    for p in iter_domain(name, n):
        total += 1
        if exceptional(p):
            exceptional_count += 1
            try:
                raw(p)
            except ExceptionalElement:
                continue
            return _fail(name, n, start, p, "exceptional element has a factor occurrence")
        try:
            q = raw(p)
        except ExceptionalElement:
            return _fail(name, n, start, p, "movable element matched the exceptional predicate")
        if not _ok(validator, q) or not size_check(q):
            return _fail(name, n, start, p, "image leaves the domain", image=encode(q))
        if exceptional(q):
            return _fail(name, n, start, p, "image is exceptional", image=encode(q))
        if raw(q) != p:
            return _fail(name, n, start, p, "not an involution", image=encode(q))
        if abs(stat(q) - stat(p)) != 1:
            return _fail(name, n, start, p, "tracked statistic did not move by one",
                         image=encode(q))
        images.add(encode(q))
    if len(images) != total - exceptional_count:
        return _fail(name, n, start, None, "image count mismatch",
                     images=len(images), movable=total - exceptional_count)
    return None


def _check_chi1(n, start):
    total = 0
    images = set()
    for p in iter_domain("chi1", n):
        total += 1
        q = apply_bijection("chi1", p)
        if not _ok(validate_lh_or_lvu, q) or x_length(q) != n:
            return _fail("chi1", n, start, p, "image leaves the domain", image=encode(q))
        if apply_bijection("chi1", q) != p:
            return _fail("chi1", n, start, p, "not an involution", image=encode(q))
        if _chi1_index(q) != _chi1_index(p):
            return _fail("chi1", n, start, p, "weight index not preserved", image=encode(q))
        images.add(q)
    if len(images) != total:
        return _fail("chi1", n, start, None, "image count mismatch",
                     images=len(images), domain=total)
    # the two encodings are exchanged i-level by i-level
    lh = {}
    lvu = {}
    for tokens in iter_domain("lh", n):
        i = _chi1_index(tokens)
        lh[i] = lh.get(i, 0) + 1
    for tokens in iter_domain("lvu", n):
        i = _chi1_index(tokens)
        lvu[i] = lvu.get(i, 0) + 1
    if lh != lvu:
        return _fail("chi1", n, start, None, "weight-level counts differ between encodings",
                     lh=lh, lvu=lvu)
    return None


def _check_chi2(name, n, start):
    domain = list(iter_domain("chi2", n))
    images = []
    for q in domain:
        p = apply_bijection("chi2", q)
        if not _ok(validate_lh, p) or x_length(p) != n:
            return _fail(name, n, start, q, "image is not a valid h-weighted path",
                         image=encode(p))
        if apply_bijection("chi2_inv", p) != q:
            return _fail(name, n, start, q, "inverse roundtrip failed", image=encode(p))
        images.append(p)
    codomain = list(iter_domain("lh", n))
    if len(set(images)) != len(domain):
        return _fail(name, n, start, None, "images collide",
                     images=len(set(images)), domain=len(domain))
    if len(codomain) != len(domain):
        return _fail(name, n, start, None, "domain and codomain sizes differ",
                     domain=len(domain), codomain=len(codomain))
    if set(images) != set(codomain):
        return _fail(name, n, start, None, "image does not cover the codomain")
    for p in codomain:
        if apply_bijection("chi2", apply_bijection("chi2_inv", p)) != p:
            return _fail(name, n, start, p, "forward roundtrip failed")
    return None


def _check_hat_varphi(n, start):
    total = 0
    images = set()
    for q in iter_domain("hat_varphi", n):
        total += 1
        p = apply_bijection("hat_varphi", q)
        if not _ok(validate_marked_d, p):
            return _fail("hat_varphi", n, start, q, "image is not a d-marked path",
                         image=encode(p))
        if x_length(p) - count_base(p, "d") != n:
            return _fail("hat_varphi", n, start, q, "image has the wrong index",
                         image=encode(p))
        images.add(p)
    codomain = 0
    for i in range(n + 1):
        codomain += sum(1 for _ in iter_path_strings_with_d_count(n + i, i))
    if len(images) != total:
        return _fail("hat_varphi", n, start, None, "images collide",
                     images=len(images), domain=total)
    if total != codomain:
        return _fail("hat_varphi", n, start, None, "domain and codomain sizes differ",
                     domain=total, codomain=codomain)
    return None
