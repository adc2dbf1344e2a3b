"""Desk-scale verification of the matching and sumset theorems.

Each check runs an exhaustive or seeded-random battery of instances and
returns a CheckReport.  Failure and flagged records are plain dicts with
JSON-safe values so reports serialize deterministically.

Instance counting conventions: sweep-style checks count every examined
instance in ``instances_tested`` and additionally count the vacuous ones
(hypothesis or precondition unmet) in ``instances_skipped``; a
single-instance check whose hypothesis is unmet reports zero instances
and status "skipped".
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from time import perf_counter

from .errors import CrossValidationError, EmptyInput, IdentityInB, NotApplicable, SizeLimit, SizeMismatch
from .groups import GroupTable, LatticeGroup, classify, cyclic_subgroup, enumerate_subgroups
from .matching import HallViolator, Matching, brute_force_matching, find_matching, verify_matching
from .reports import elements_json as _els
from .subsets import GroupSubset, _same_group, candidate_set, product_set, stable_set, unique_products

DEFAULT_EXHAUSTIVE_PAIR_CAP = 6
DEFAULT_PROPERTY_EXHAUSTIVE_CAP = 7
DEFAULT_AUTOMATCHING_CAP = 14
DEFAULT_SAMPLES = 2000
DEFAULT_HALL_SAMPLES = 500
DEFAULT_LATTICE_SIZE_CAP = 10


@dataclass
class CheckReport:
    """Outcome of one theorem check.

    ``failures`` holds records that falsify the asserted invariant;
    ``flagged`` holds non-failing observations worth reporting (found
    witnesses, stated-bound counterexamples, confirmation counts).
    """

    check_name: str
    instances_tested: int = 0
    instances_skipped: int = 0
    failures: list = field(default_factory=list)
    flagged: list = field(default_factory=list)
    status: str = "skipped"
    seed: int | None = None
    elapsed: float = 0.0

    def finish(self, t0: float) -> "CheckReport":
        self.elapsed = perf_counter() - t0
        if self.failures:
            self.status = "fail"
        elif self.instances_tested > 0:
            self.status = "pass"
        else:
            self.status = "skipped"
        return self

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    def to_dict(self, include_elapsed: bool = False) -> dict:
        out = {
            "check": self.check_name,
            "status": self.status,
            "instances_tested": self.instances_tested,
            "instances_skipped": self.instances_skipped,
            "seed": self.seed,
            "failures": self.failures,
            "flagged": self.flagged,
        }
        if include_elapsed:
            out["elapsed_seconds"] = round(self.elapsed, 6)
        return out


@dataclass(frozen=True)
class OlsonWitness:
    """A subgroup H and an H-invariant subset T of AB meeting the bound.

    ``side`` is "left" when HT = T and "right" when TH = T.
    """

    subgroup: GroupSubset
    invariant_set: GroupSubset
    side: str


@dataclass(frozen=True)
class CounterexamplePair:
    """A pair (A, B) with |A| = |B| and 1 not in B that admits no matching.

    A is the cyclic subgroup generated by ``generator``; B swaps the
    identity for ``outsider``, an element outside A.
    """

    left: GroupSubset
    right: GroupSubset
    generator: object
    outsider: object
    violator: HallViolator


def _mask_subset(group, mask: int, universe) -> GroupSubset:
    return GroupSubset(group, (universe[i] for i in range(len(universe)) if mask >> i & 1))


def _map_ordered(fn, items: list, jobs: int) -> list:
    """Apply fn to items, optionally on a process pool, preserving order."""
    if jobs > 1 and len(items) > 1:
        chunk = max(1, len(items) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items, chunksize=chunk))
    return [fn(x) for x in items]


# ---------------------------------------------------------------------------
# Product-set lower bound (unique-product hypothesis)


def check_kemperman(A: GroupSubset, B: GroupSubset) -> CheckReport:
    """Assert |AB| >= |A| + |B| - 1 when AB has a unique-product element."""
    t0 = perf_counter()
    _same_group(A, B)
    if len(A) == 0 or len(B) == 0:
        raise EmptyInput("A and B must be nonempty")
    report = CheckReport("kemperman")
    outcome = _kemperman_instance_subsets(A, B)
    if outcome is None:
        report.flagged.append({"kind": "hypothesis-unmet",
                               "why": "no unique-product element in AB"})
    else:
        report.instances_tested = 1
        if outcome is not True:
            report.failures.append(outcome)
    return report.finish(t0)


def _kemperman_instance_subsets(A: GroupSubset, B: GroupSubset):
    witnesses = unique_products(A, B)
    if not witnesses:
        return None
    ab = product_set(A, B)
    if len(ab) >= len(A) + len(B) - 1:
        return True
    return {
        "kind": "product-bound-violated",
        "A": _els(A), "B": _els(B),
        "A_size": len(A), "B_size": len(B), "AB_size": len(ab),
        "unique_product": witnesses[0].value,
    }


def _kemperman_instance(group, masks):
    ma, mb = masks
    universe = range(group.n)
    return _kemperman_instance_subsets(_mask_subset(group, ma, universe),
                                       _mask_subset(group, mb, universe))


def sweep_kemperman(group: GroupTable, *, exhaustive_cap: int = DEFAULT_EXHAUSTIVE_PAIR_CAP,
                    samples: int = DEFAULT_SAMPLES, seed: int = 0,
                    mode: str = "auto", jobs: int = 1) -> CheckReport:
    """Run the product-set bound over all nonempty pairs (A, B), or a
    seeded sample of pairs when the group is over the exhaustive cap."""
    t0 = perf_counter()
    n = group.n
    if mode == "auto":
        mode = "exhaustive" if n <= exhaustive_cap else "sample"
    if mode == "exhaustive":
        if n > exhaustive_cap:
            raise SizeLimit("exhaustive product-bound sweep", n, exhaustive_cap)
        instances = [(ma, mb) for ma in range(1, 1 << n) for mb in range(1, 1 << n)]
        used_seed = None
    else:
        rng = random.Random(seed)
        instances = [(rng.randrange(1, 1 << n), rng.randrange(1, 1 << n))
                     for _ in range(samples)]
        used_seed = seed
    report = CheckReport("kemperman", seed=used_seed)
    for outcome in _map_ordered(partial(_kemperman_instance, group), instances, jobs):
        report.instances_tested += 1
        if outcome is None:
            report.instances_skipped += 1
        elif outcome is not True:
            report.failures.append(outcome)
    return report.finish(t0)


# ---------------------------------------------------------------------------
# Identity-free containment bound (both the stated and the corrected form)


def _corollary_instance(U: GroupSubset, V: GroupSubset, X: GroupSubset, choice: str) -> dict:
    record = {
        "U": _els(U), "V": _els(V), "X": _els(X), "X_choice": choice,
        "U_size": len(U), "V_size": len(V), "X_size": len(X),
    }
    record["corrected_holds"] = len(X) >= len(U) + len(V)
    record["stated_holds"] = len(X) >= len(U) + len(V) + 1
    return record


def check_corollary(U: GroupSubset, V: GroupSubset, X: GroupSubset) -> CheckReport:
    """Test the containment bound for U, V, UV inside an identity-free X.

    The corrected bound |X| >= |U| + |V| is the asserted invariant; the
    stated bound |X| >= |U| + |V| + 1 is evaluated alongside and its
    counterexamples are flagged, not failed.  Precondition violations
    produce a skipped report rather than an exception.
    """
    t0 = perf_counter()
    g = _same_group(U, V, X)
    report = CheckReport("corollary")
    why = None
    if len(U) == 0 or len(V) == 0:
        why = "U and V must be nonempty"
    elif g.identity in X:
        why = "X contains the identity"
    elif not (U.issubset(X) and V.issubset(X) and product_set(U, V).issubset(X)):
        why = "U, V and UV must all be contained in X"
    if why is not None:
        report.instances_skipped = 1
        report.flagged.append({"kind": "precondition-unmet", "why": why})
        return report.finish(t0)
    record = _corollary_instance(U, V, X, "given")
    report.instances_tested = 1
    if not record["corrected_holds"]:
        report.failures.append({"kind": "corrected-bound-violated", **record})
    if not record["stated_holds"]:
        report.flagged.append({"kind": "stated-bound-counterexample", **record})
    return report.finish(t0)


def _corollary_pair(group, masks):
    mu, mv = masks
    universe = range(1, group.n)
    U = _mask_subset(group, mu, universe)
    V = _mask_subset(group, mv, universe)
    UV = product_set(U, V)
    if group.identity in UV:
        return None
    X_min = U.union(V).union(UV)
    X_full = GroupSubset(group, universe)
    return (_corollary_instance(U, V, X_min, "minimal"),
            _corollary_instance(U, V, X_full, "full"))


def sweep_corollary(group: GroupTable, *, order_cap: int = DEFAULT_EXHAUSTIVE_PAIR_CAP,
                    jobs: int = 1) -> CheckReport:
    """Exhaust the containment bound over admissible (U, V) pairs.

    U and V range over nonempty subsets of the non-identity elements; a
    pair is admissible when UV avoids the identity.  Each admissible pair
    is tested against two X choices: the minimal U ∪ V ∪ UV and the full
    complement of the identity.  Stated-bound counterexamples are sorted
    smallest-X first.
    """
    t0 = perf_counter()
    n = group.n
    if n > order_cap:
        raise SizeLimit("containment-bound sweep", n, order_cap)
    size = n - 1
    instances = [(mu, mv) for mu in range(1, 1 << size) for mv in range(1, 1 << size)]
    report = CheckReport("corollary")
    stated = []
    for outcome in _map_ordered(partial(_corollary_pair, group), instances, jobs):
        if outcome is None:
            report.instances_tested += 1
            report.instances_skipped += 1
            continue
        for record in outcome:
            report.instances_tested += 1
            if not record["corrected_holds"]:
                report.failures.append({"kind": "corrected-bound-violated", **record})
            if not record["stated_holds"]:
                stated.append({"kind": "stated-bound-counterexample", **record})
    stated.sort(key=lambda r: (r["X_size"], r["U_size"], r["V_size"],
                               r["X"], r["U"], r["V"]))
    report.flagged.extend(stated)
    return report.finish(t0)


# ---------------------------------------------------------------------------
# Subgroup-invariant subset bound


def _invariant_within(group, H: GroupSubset, ab: GroupSubset, side: str) -> set:
    """Maximal subset of AB that is a union of H-orbits on the given side."""
    members = ab.members
    chosen: set = set()
    seen: set = set()
    for t in ab.elements:
        if t in seen:
            continue
        if side == "left":
            orbit = {group.mul(h, t) for h in H}
        else:
            orbit = {group.mul(t, h) for h in H}
        seen |= orbit
        if orbit <= members:
            chosen |= orbit
    return chosen


def _olson_search(A: GroupSubset, B: GroupSubset, subgroups) -> OlsonWitness | None:
    """Find (H, T, side) with T a nonempty H-invariant subset of AB and
    |T| >= |A| + |B| - |H|; complete because every admissible T is a union
    of orbits, so the maximal union is tested for each H and side."""
    g = A.group
    ab = product_set(A, B)
    need = len(A) + len(B)
    for H in subgroups:
        for side in ("left", "right"):
            chosen = _invariant_within(g, H, ab, side)
            if chosen and len(chosen) >= need - len(H):
                return OlsonWitness(subgroup=H, invariant_set=GroupSubset(g, chosen), side=side)
    return None


def _witness_record(A, B, witness: OlsonWitness) -> dict:
    return {
        "kind": "olson-witness",
        "H": _els(witness.subgroup), "T": _els(witness.invariant_set),
        "side": witness.side,
        "T_size": len(witness.invariant_set),
        "bound": len(A) + len(B) - len(witness.subgroup),
    }


def check_olson(A: GroupSubset, B: GroupSubset, *, subgroup_cap: int = 24) -> CheckReport:
    """Search all subgroups for an invariant-subset witness of the bound
    |AB| >= |T| >= |A| + |B| - |H|."""
    t0 = perf_counter()
    g = _same_group(A, B)
    if not isinstance(g, GroupTable):
        raise ValueError("the invariant-subset bound is checked on finite groups only")
    if len(A) == 0 or len(B) == 0:
        raise EmptyInput("A and B must be nonempty")
    subgroups = enumerate_subgroups(g, subgroup_cap)
    report = CheckReport("olson")
    report.instances_tested = 1
    witness = _olson_search(A, B, subgroups)
    if witness is None:
        report.failures.append({"kind": "no-witness", "A": _els(A), "B": _els(B)})
    else:
        report.flagged.append(_witness_record(A, B, witness))
    return report.finish(t0)


def _olson_instance(group, subgroup_elements, masks):
    ma, mb = masks
    universe = range(group.n)
    A = _mask_subset(group, ma, universe)
    B = _mask_subset(group, mb, universe)
    subgroups = [GroupSubset(group, els) for els in subgroup_elements]
    witness = _olson_search(A, B, subgroups)
    if witness is None:
        return {"kind": "no-witness", "A": _els(A), "B": _els(B)}
    return None


def sweep_olson(group: GroupTable, *, exhaustive_cap: int = DEFAULT_EXHAUSTIVE_PAIR_CAP,
                samples: int = DEFAULT_SAMPLES, seed: int = 0,
                subgroup_cap: int = 24, jobs: int = 1) -> CheckReport:
    """Witness search over all nonempty pairs (exhaustive up to the cap,
    seeded samples above it)."""
    t0 = perf_counter()
    n = group.n
    subgroup_elements = tuple(s.elements for s in enumerate_subgroups(group, subgroup_cap))
    if n <= exhaustive_cap:
        instances = [(ma, mb) for ma in range(1, 1 << n) for mb in range(1, 1 << n)]
        used_seed = None
    else:
        rng = random.Random(seed)
        instances = [(rng.randrange(1, 1 << n), rng.randrange(1, 1 << n))
                     for _ in range(samples)]
        used_seed = seed
    report = CheckReport("olson", seed=used_seed)
    fn = partial(_olson_instance, group, subgroup_elements)
    for outcome in _map_ordered(fn, instances, jobs):
        report.instances_tested += 1
        if outcome is not None:
            report.failures.append(outcome)
    return report.finish(t0)


# ---------------------------------------------------------------------------
# Automatching: a matching A -> A exists iff the identity is outside A


def _automatching_instance(group, mask):
    A = _mask_subset(group, mask, range(1, group.n))
    result = find_matching(A, A)
    if isinstance(result, HallViolator):
        return {"kind": "automatching-violator", "A": _els(A),
                "S": _els(result.subset), "neighborhood": _els(result.neighborhood),
                "deficiency": result.deficiency}
    verdict = verify_matching(A, A, result)
    if not verdict:
        return {"kind": "invalid-matching", "A": _els(A), "why": verdict.reason}
    return None


def check_automatching(group: GroupTable, *, order_cap: int = DEFAULT_AUTOMATCHING_CAP,
                       brute_cap: int = 5, jobs: int = 1) -> CheckReport:
    """Exhaust every nonempty identity-free A and require a matching A -> A.

    The converse direction is confirmed alongside: for every A containing
    the identity (up to ``brute_cap`` elements), the engine reports the
    structured identity error and the brute-force oracle finds no valid
    bijection.  Those confirmations are flagged, not counted as instances.
    """
    t0 = perf_counter()
    n = group.n
    if n > order_cap:
        raise SizeLimit("automatching sweep", n, order_cap)
    report = CheckReport("automatching")
    instances = list(range(1, 1 << (n - 1)))
    for outcome in _map_ordered(partial(_automatching_instance, group), instances, jobs):
        report.instances_tested += 1
        if outcome is not None:
            report.failures.append(outcome)

    confirmations = 0
    for k in range(0, min(brute_cap - 1, n - 1) + 1):
        for rest in itertools.combinations(range(1, n), k):
            A = GroupSubset(group, (0, *rest))
            try:
                find_matching(A, A)
                report.failures.append({"kind": "identity-error-not-raised", "A": _els(A)})
                continue
            except IdentityInB:
                pass
            if brute_force_matching(A, A) is not None:
                report.failures.append({"kind": "matching-despite-identity", "A": _els(A)})
            else:
                confirmations += 1
    report.flagged.append({"kind": "identity-in-A-confirmations", "count": confirmations})
    return report.finish(t0)


# ---------------------------------------------------------------------------
# Matching-property classification


def _property_instance(group, pair):
    a_els, b_els = pair
    A = GroupSubset(group, a_els)
    B = GroupSubset(group, b_els)
    result = find_matching(A, B)
    if isinstance(result, Matching):
        return None
    return {"A": _els(A), "B": _els(B), "S": _els(result.subset),
            "neighborhood": _els(result.neighborhood), "deficiency": result.deficiency}


def check_matching_property(group: GroupTable, *,
                            exhaustive_cap: int = DEFAULT_PROPERTY_EXHAUSTIVE_CAP,
                            samples: int = DEFAULT_SAMPLES, seed: int = 0,
                            order_cap: int = 24, jobs: int = 1) -> CheckReport:
    """Compare the observed matching property with the classification.

    Sweeps all pairs (A, B) with |A| = |B| and identity outside B
    (exhaustively up to the cap, seeded samples above) and requires the
    outcome to equal the predicted matching property.  When pairs fail,
    the minimal failing pair (by |A|, then lexicographically) is flagged.
    """
    t0 = perf_counter()
    n = group.n
    predicted = classify(group).predicted_matching_property
    if n <= exhaustive_cap:
        instances = [
            (a_els, b_els)
            for k in range(1, n)
            for a_els in itertools.combinations(range(n), k)
            for b_els in itertools.combinations(range(1, n), k)
        ]
        used_seed = None
        mode = "exhaustive"
    elif n <= order_cap:
        rng = random.Random(seed)
        instances = []
        for _ in range(samples):
            k = rng.randint(1, n - 1)
            a_els = tuple(sorted(rng.sample(range(n), k)))
            b_els = tuple(sorted(rng.sample(range(1, n), k)))
            instances.append((a_els, b_els))
        used_seed = seed
        mode = "sampled"
    else:
        raise SizeLimit("matching-property sweep", n, order_cap)

    report = CheckReport("matching-property", seed=used_seed)
    failing = []
    for outcome in _map_ordered(partial(_property_instance, group), instances, jobs):
        report.instances_tested += 1
        if outcome is not None:
            failing.append(outcome)
    property_holds = not failing
    minimal = min(failing, key=lambda r: (len(r["A"]), r["A"], r["B"])) if failing else None
    report.flagged.append({
        "kind": "matching-property-outcome",
        "mode": mode,
        "predicted": predicted,
        "property_holds": property_holds,
        "pairs_failed": len(failing),
        "counterexample": minimal,
    })
    if property_holds != predicted:
        report.failures.append({
            "kind": "classification-mismatch",
            "predicted": predicted,
            "property_holds": property_holds,
            "counterexample": minimal,
        })
    return report.finish(t0)


def construct_counterexample(group: GroupTable) -> CounterexamplePair:
    """Build the canonical unmatchable pair for a composite-order group.

    Takes the least-index element of order >= 2 that does not generate
    the group, A the cyclic subgroup it generates, and B = A with the
    identity swapped for the least-index outside element; confirms by
    machine that no matching exists.
    """
    judgement = classify(group)
    if judgement.predicted_matching_property:
        raise NotApplicable(
            f"{group.describe()} is trivial or of prime order; every pair matches")
    for a in range(1, group.n):
        A = cyclic_subgroup(group, a)
        if len(A) < group.n:
            break
    else:  # unreachable for composite order; defensive
        raise NotApplicable("every non-identity element generates the group")
    outsider = min(set(range(group.n)) - A.members)
    B = GroupSubset(group, (A.members - {0}) | {outsider})
    result = find_matching(A, B)
    if not isinstance(result, HallViolator):
        raise CrossValidationError(
            "constructed pair unexpectedly admits a matching; engine and theory disagree")
    return CounterexamplePair(left=A, right=B, generator=a, outsider=outsider,
                              violator=result)


# ---------------------------------------------------------------------------
# Torsion-free branch: randomized lattice instances


def _random_point(rng: random.Random, d: int, bound: int) -> tuple:
    return tuple(rng.randint(-bound, bound) for _ in range(d))


def check_lattice_matching(d: int, trials: int, *, max_size: int = 8,
                           coordinate_bound: int = 10, seed: int = 0) -> CheckReport:
    """Sample |A| = |B| <= max_size lattice subsets (zero kept out of B) and
    require a matching every time; instances of size <= 6 are additionally
    confirmed against the brute-force bijection oracle."""
    t0 = perf_counter()
    if max_size > DEFAULT_LATTICE_SIZE_CAP:
        raise SizeLimit("lattice instance size", max_size, DEFAULT_LATTICE_SIZE_CAP)
    group = LatticeGroup(d)
    if (2 * coordinate_bound + 1) ** d <= max_size:
        raise ValueError("coordinate_bound too small for the requested subset size")
    rng = random.Random(seed)
    report = CheckReport("lattice-matching", seed=seed)
    confirmed = 0
    zero = group.identity
    for _ in range(trials):
        k = rng.randint(1, max_size)
        a_els: set = set()
        while len(a_els) < k:
            a_els.add(_random_point(rng, d, coordinate_bound))
        b_els: set = set()
        while len(b_els) < k:
            p = _random_point(rng, d, coordinate_bound)
            if p != zero:
                b_els.add(p)
        A = GroupSubset(group, a_els)
        B = GroupSubset(group, b_els)
        result = find_matching(A, B)
        report.instances_tested += 1
        matched = isinstance(result, Matching)
        if not matched:
            report.failures.append({
                "kind": "lattice-violator", "A": _els(A), "B": _els(B),
                "S": _els(result.subset), "deficiency": result.deficiency})
        elif not verify_matching(A, B, result):
            report.failures.append({"kind": "invalid-matching", "A": _els(A), "B": _els(B)})
        if k <= 6:
            brute = brute_force_matching(A, B)
            if (brute is not None) != matched:
                report.failures.append({
                    "kind": "oracle-disagreement", "A": _els(A), "B": _els(B),
                    "engine": matched, "brute_force": brute is not None})
            else:
                confirmed += 1
    report.flagged.append({"kind": "brute-force-confirmations", "count": confirmed})
    return report.finish(t0)


# ---------------------------------------------------------------------------
# Three-way cross-validation: engine, brute force, Hall inequalities


def cross_validate_hall(A: GroupSubset, B: GroupSubset, *, max_size: int = 5) -> bool:
    """Agreement of the engine, the bijection oracle, and Hall's condition.

    Hall's condition is evaluated in both equivalent forms for every
    nonempty S inside A: the union form |union of candidate sets| >= |S|
    and the complement form |stable set| <= |A| - |S|.  Returns the common
    verdict; raises CrossValidationError if any route disagrees.
    """
    g = _same_group(A, B)
    if len(A) == 0 or len(B) == 0:
        raise EmptyInput("A and B must be nonempty")
    if len(A) != len(B):
        raise SizeMismatch(f"|A| = {len(A)} but |B| = {len(B)}")
    if len(A) > max_size:
        raise SizeLimit("Hall cross-validation", len(A), max_size)
    if g.identity in B:
        raise IdentityInB("B contains the identity")

    engine_ok = isinstance(find_matching(A, B), Matching)
    brute_ok = brute_force_matching(A, B) is not None

    hall_ok = True
    rows = {a: candidate_set(A, B, a) for a in A.elements}
    for mask in range(1, 1 << len(A)):
        s_els = [A.elements[i] for i in range(len(A)) if mask >> i & 1]
        union: set = set()
        for s in s_els:
            union |= rows[s].members
        union_ok = len(union) >= len(s_els)
        inter = stable_set(A, B, GroupSubset(g, s_els))
        inter_ok = len(inter) <= len(A) - len(s_els)
        if union_ok != inter_ok:
            raise CrossValidationError(
                f"Hall forms disagree on S = {s_els}: union {union_ok}, complement {inter_ok}")
        hall_ok = hall_ok and union_ok
    if not (engine_ok == brute_ok == hall_ok):
        raise CrossValidationError(
            f"routes disagree: engine={engine_ok} brute={brute_ok} hall={hall_ok}")
    return engine_ok


def _hall_instance(group, pair):
    a_els, b_els = pair
    A = GroupSubset(group, a_els)
    B = GroupSubset(group, b_els)
    try:
        cross_validate_hall(A, B)
    except CrossValidationError as exc:
        return {"kind": "cross-validation-disagreement",
                "A": _els(A), "B": _els(B), "why": str(exc)}
    return None


def sweep_hall(group: GroupTable, *, samples: int = DEFAULT_HALL_SAMPLES,
               seed: int = 0, max_size: int = 5, jobs: int = 1) -> CheckReport:
    """Seeded random instances of the three-way Hall cross-validation."""
    t0 = perf_counter()
    n = group.n
    report = CheckReport("hall", seed=seed)
    if n < 2:
        return report.finish(t0)
    rng = random.Random(seed)
    instances = []
    for _ in range(samples):
        k = rng.randint(1, min(max_size, n - 1))
        a_els = tuple(sorted(rng.sample(range(n), k)))
        b_els = tuple(sorted(rng.sample(range(1, n), k)))
        instances.append((a_els, b_els))
    for outcome in _map_ordered(partial(_hall_instance, group), instances, jobs):
        report.instances_tested += 1
        if outcome is not None:
            report.failures.append(outcome)
    return report.finish(t0)
