"""
Наборы проверок: каждый закон сверяется с поточечным перебором на окне.

Если символьный закон и поточечное вычисление расходятся, проваливается
символьная сторона. Наборы регистрируются декоратором @suite и
запускаются по реестру core.suites (suites.yaml).
"""
import logging
from typing import Callable, Iterable, Optional, Union

from core.errors import BicyclicError, MiddleLayerIdentityImage, NotInSubmonoid
from core.semigroup import (
    F3,
    IDENTITY,
    Elem,
    Family,
    Ray,
    bicyclic_mul,
    corner_contains,
    corner_unshift,
    d_classes,
    d_related,
    d_witness,
    idem_leq,
    idempotents,
    inv,
    make_family,
    mul,
    nat_leq,
    nat_leq_search,
    sandwich,
    shift_map,
    window,
)
from core.suites import GROUPS, SuitesConfig, default_suites_config
from endo.generators import Alpha, Flip, Shift
from endo.normal_form import (
    IDENTITY_NF,
    LAMBDA,
    VARPI,
    NormalForm,
    alpha,
    nf_apply,
    nf_apply_chained,
    nf_compose,
    nf_make,
    printed_exponent,
)
from endo.semidirect import SDPair, nf_to_sd, sd_mul, sd_to_nf

from .report import Report
from .scan import scan_exclusions, scan_grid
from .tabulated import tabulate, tabulate_map
from .verify import decompose

logger = logging.getLogger("oracle.suites")

SuiteResult = Union[Report, list[Report]]
SUITES: dict[str, Callable[[dict], SuiteResult]] = {}


def suite(name: str):
    def register(fn):
        SUITES[name] = fn
        return fn
    return register


# ── Полугруппа ───────────────────────────────────────────────────

@suite("associativity")
def check_associativity(grid: dict) -> Report:
    xs = window(grid["N"], F3)
    n = len(xs)
    report = Report("associativity", {**grid, "elements": n, "triples": n ** 3})
    products = [[mul(x, y) for y in xs] for x in xs]
    for a, x in enumerate(xs):
        row = products[a]
        for b, y in enumerate(xs):
            xy = row[b]
            for z, yz in zip(xs, products[b]):
                lhs = mul(xy, z)
                rhs = mul(x, yz)
                if lhs != rhs:
                    report.fail((x, y, z), rhs, lhs)
    report.count(n ** 3 - report.total_counterexamples)
    return report


@suite("identity")
def check_identity(grid: dict) -> Report:
    report = Report("identity", grid)
    for starts in grid["families"]:
        fam = make_family(starts)
        for x in window(grid["N"], fam):
            report.record(mul(IDENTITY, x) == x and mul(x, IDENTITY) == x, (str(fam), x), x,
                          (mul(IDENTITY, x), mul(x, IDENTITY)))
    return report


@suite("inverse")
def check_inverse(grid: dict) -> list[Report]:
    axioms = Report("inverse_axioms", grid)
    big = window(grid["N"], F3)
    for x in big:
        y = inv(x)
        axioms.record(mul(mul(x, y), x) == x, (x, "x·x⁻¹·x"), x, mul(mul(x, y), x))
        axioms.record(mul(mul(y, x), y) == y, (x, "x⁻¹·x·x⁻¹"), y, mul(mul(y, x), y))

    unique = Report("inverse_uniqueness", grid)
    for x in window(grid["unique_N"], F3):
        found = [y for y in big if mul(mul(x, y), x) == x and mul(mul(y, x), y) == y]
        unique.record(found == [inv(x)], x, [inv(x)], found)
    return [axioms, unique]


@suite("nat_leq")
def check_nat_leq(grid: dict) -> Report:
    report = Report("nat_leq_closed_form", grid)
    xs = window(grid["N"], F3)
    for a in xs:
        for b in xs:
            closed = nat_leq(a, b, F3)
            report.record(closed == nat_leq_search(a, b, F3), (a, b), nat_leq_search(a, b, F3), closed)
    return report


@suite("partial_order")
def check_partial_order(grid: dict) -> Report:
    report = Report("partial_order", grid)
    xs = window(grid["N"], F3)
    ups = {a: [b for b in xs if nat_leq(a, b, F3)] for a in xs}
    for a in xs:
        report.record(a in ups[a], (a, "reflexive"), True, False)
        for b in ups[a]:
            if b != a:
                report.record(not nat_leq(b, a, F3), (a, b, "antisymmetric"), False, True)
            for c in ups[b]:
                report.record(nat_leq(a, c, F3), (a, b, c, "transitive"), True, False)
    return report


@suite("order_chains")
def check_order_chains(grid: dict) -> Report:
    report = Report("order_chains", grid)
    chains = [
        [Elem(0, 0, 2), Elem(0, 0, 1), Elem(0, 0, 0)],
        [Elem(2, 2, 0), Elem(1, 1, 1), Elem(0, 0, 2)],
    ]
    for chain in chains:
        for lower, upper in zip(chain, chain[1:]):
            report.record(nat_leq(lower, upper, F3), (lower, upper), True, False)
            report.record(nat_leq_search(lower, upper, F3), (lower, upper, "search"), True, False)
    report.record(not nat_leq(Elem(0, 0, 0), Elem(0, 0, 1), F3), (Elem(0, 0, 0), Elem(0, 0, 1)), False, True)
    product = mul(Elem(1, 1, 0), Elem(0, 0, 2))
    report.record(product == Elem(1, 1, 1), (Elem(1, 1, 0), Elem(0, 0, 2)), Elem(1, 1, 1), product)
    return report


@suite("d_classes")
def check_d_classes(grid: dict) -> Report:
    report = Report("d_classes", grid)
    for n in range(1, grid["n_max"] + 1):
        xs = window(grid["N"], Family.canonical(n))
        classes = d_classes(xs)
        report.record(len(classes) == n, (f"F^{n}", "class count"), n, len(classes))
        index = {a: c for c, members in enumerate(classes) for a in members}
        for a in xs:
            for b in xs:
                related = d_related(a, b)
                report.record(related == d_related(b, a) and related == (index[a] == index[b]),
                              (a, b), index[a] == index[b], related)

    candidates = window(grid["witness_N"], F3)
    for a in window(grid["search_N"], F3):
        aa = mul(a, inv(a))
        for b in window(grid["search_N"], F3):
            bb = mul(b, inv(b))
            exists = any(mul(z, inv(z)) == aa and mul(inv(z), z) == bb for z in candidates)
            report.record(exists == d_related(a, b), (a, b, "witness search"), d_related(a, b), exists)
            report.record((d_witness(a, b) is not None) == d_related(a, b), (a, b, "witness"),
                          d_related(a, b), d_witness(a, b))
    return report


@suite("shift_isomorphism")
def check_shift_isomorphism(grid: dict) -> Report:
    report = Report("shift_isomorphism", grid)
    for s, t in grid["intervals"]:
        sub = [x for x in window(grid["N"], F3) if s <= x.p <= t]
        image = [shift_map(x, s) for x in sub]
        target = window(grid["N"], Family.canonical(t - s + 1))
        report.record(sorted(image) == target and len(set(image)) == len(sub),
                      ((s, t), "bijective"), len(target), len(set(image)))
        report.record(len(d_classes(sub)) == t - s + 1, ((s, t), "D-classes"), t - s + 1, len(d_classes(sub)))
        for x in sub:
            for y in sub:
                lhs = shift_map(mul(x, y), s)
                rhs = mul(shift_map(x, s), shift_map(y, s))
                report.record(lhs == rhs, ((s, t), x, y), rhs, lhs)
    return report


@suite("corner")
def check_corner(grid: dict) -> Report:
    report = Report("corner_contains", grid)
    for a in window(grid["N"], F3):
        for m in range(grid["m_max"] + 1):
            fixed = sandwich(a, m) == a
            report.record(corner_contains(a, m) == fixed, (a, m), fixed, corner_contains(a, m))
    return report


@suite("ray_inductive")
def check_ray_inductive(grid: dict) -> Report:
    report = Report("ray_inductive", grid)
    for start in range(grid["start_max"] + 1):
        r = Ray(start)
        for x in range(grid["x_max"] + 1):
            report.record(x not in r or x + 1 in r, (str(r), x), True, False)
        report.record(r.shifted(1).meet(r) == r, (str(r), "(-1+F)∩F"), str(r), str(r.shifted(1).meet(r)))
    return report


@suite("idempotent_order")
def check_idempotent_order(grid: dict) -> Report:
    report = Report("idempotent_order", grid)
    es = idempotents(grid["N"], F3)
    for e in es:
        for f in es:
            report.record(idem_leq(e, f) == nat_leq(e, f, F3), (e, f), idem_leq(e, f), nat_leq(e, f, F3))
    return report


@suite("bicyclic")
def check_bicyclic(grid: dict) -> Report:
    report = Report("bicyclic", grid)
    fam = make_family([0])
    xs = window(grid["N"], fam)
    for x in xs:
        for y in xs:
            expected = Elem(*bicyclic_mul((x.i, x.j), (y.i, y.j)), 0)
            report.record(mul(x, y, fam) == expected, (x, y), expected, mul(x, y, fam))
    return report


# ── Эндоморфизмы ─────────────────────────────────────────────────

@suite("closed_forms")
def check_closed_forms(grid: dict) -> Report:
    report = Report("closed_forms", grid)
    xs = window(grid["N"], F3)
    for f in scan_grid(grid["K"], grid["M"]):
        for x in xs:
            chained = nf_apply_chained(f, x)
            report.record(nf_apply(f, x) == chained, (f, x), chained, nf_apply(f, x))
    return report


@suite("compose_soundness")
def check_compose_soundness(grid: dict) -> Report:
    report = Report("compose_soundness", grid)
    xs = window(grid["N"], F3)
    grid_forms = scan_grid(grid["K"], grid["M"])
    for f in grid_forms:
        fx = [nf_apply(f, x) for x in xs]
        for g in grid_forms:
            h = nf_compose(f, g)
            for x, y in zip(xs, fx):
                expected = nf_apply(g, y)
                actual = nf_apply(h, x)
                report.record(actual == expected, (f, g, x), expected, actual)
    return report


@suite("compose_associativity")
def check_compose_associativity(grid: dict) -> Report:
    report = Report("compose_associativity", grid)
    grid_forms = scan_grid(grid["K"], grid["M"])
    for f in grid_forms:
        for g in grid_forms:
            fg = nf_compose(f, g)
            for h in grid_forms:
                lhs = nf_compose(fg, h)
                rhs = nf_compose(f, nf_compose(g, h))
                report.record(lhs == rhs, (f, g, h), rhs, lhs)
    return report


@suite("identity_law")
def check_identity_law(grid: dict) -> Report:
    report = Report("identity_law", grid)
    for f in scan_grid(grid["K"], grid["M"]):
        report.record(nf_compose(IDENTITY_NF, f) == f, (IDENTITY_NF, f), f, nf_compose(IDENTITY_NF, f))
        report.record(nf_compose(f, IDENTITY_NF) == f, (f, IDENTITY_NF), f, nf_compose(f, IDENTITY_NF))
    for x in window(4, F3):
        report.record(nf_apply(IDENTITY_NF, x) == x, (IDENTITY_NF, x), x, nf_apply(IDENTITY_NF, x))
    return report


@suite("endomorphism")
def check_endomorphism(grid: dict) -> Report:
    report = Report("endomorphism", grid)
    xs = window(grid["N"], F3)
    for f in scan_grid(grid["K"], grid["M"]):
        image = {x: nf_apply(f, x) for x in xs}
        for x in xs:
            fx = image[x]
            for y in xs:
                expected = mul(fx, image[y])
                actual = nf_apply(f, mul(x, y))
                report.record(actual == expected, (f, x, y), expected, actual)
    return report


@suite("injectivity")
def check_injectivity(grid: dict) -> Report:
    report = Report("injectivity", grid)
    xs = window(grid["N"], F3)
    for f in scan_grid(grid["K"], grid["M"]):
        images = {nf_apply(f, x) for x in xs}
        report.record(len(images) == len(xs), f, len(xs), len(images))
    return report


@suite("generator_laws")
def check_generator_laws(grid: dict) -> list[Report]:
    hom = Report("generator_homomorphism", grid)
    injective = Report("generator_injectivity", grid)
    square = Report("flip_square", grid)
    commute = Report("flip_shift_commute", grid)
    lam = Shift()
    for n in grid["n"]:
        fam = Family.canonical(n)
        flip = Flip(n)
        xs = window(grid["N"], fam)
        for g in (lam, flip):
            image = {x: g(x) for x in xs}
            injective.record(len(set(image.values())) == len(xs), (f"F^{n}", g.name), len(xs),
                             len(set(image.values())))
            for x in xs:
                for y in xs:
                    expected = mul(image[x], image[y])
                    actual = g(mul(x, y))
                    hom.record(actual == expected, (f"F^{n}", g.name, x, y), expected, actual)

        shift_n = Shift(n - 1)
        for x in window(grid["law_N"], fam):
            square.record(flip(flip(x)) == shift_n(x), (f"F^{n}", x), shift_n(x), flip(flip(x)))
            commute.record(flip(lam(x)) == lam(flip(x)), (f"F^{n}", x), lam(flip(x)), flip(lam(x)))
    return [hom, injective, square, commute]


@suite("commutation")
def check_commutation(grid: dict) -> list[Report]:
    """
    λ∘α₍ₖ₎ = α₍ₖ₎∘λ^k,  ϖ₃∘α₍ₖ₎∘ϖ₃ = α₍ₖ₎∘λ^{k+1},  ϖ₃∘α₍ₖ₎ = α₍ₖ₎∘ϖ₃∘λ^{k−1}:
    поточечно цепочками порождающих и символьно через nf_compose.
    """
    reports = [Report(name, grid) for name in
               ("shift_alpha", "flip_alpha_flip", "flip_alpha")]
    lam, flip = Shift(), Flip(3)
    xs = window(grid["N"], F3)
    for k in range(1, grid["k_max"] + 1):
        a = Alpha(k)
        laws = [
            (lam.then(a), a.then(Shift(k)),
             nf_compose(LAMBDA, alpha(k)), nf_make(k, k, 0)),
            (flip.then(a).then(flip), a.then(Shift(k + 1)),
             nf_compose(nf_compose(VARPI, alpha(k)), VARPI), nf_make(k, k + 1, 0)),
            (flip.then(a), a.then(flip).then(Shift(k - 1)),
             nf_compose(VARPI, alpha(k)), nf_compose(nf_compose(alpha(k), VARPI), nf_make(1, k - 1, 0))),
        ]
        for report, (lhs, rhs, lhs_nf, rhs_nf) in zip(reports, laws):
            for x in xs:
                report.record(lhs(x) == rhs(x), (k, x), rhs(x), lhs(x))
            report.record(lhs_nf == rhs_nf, (k, "symbolic"), rhs_nf, lhs_nf)
            for x in xs:
                report.record(nf_apply(lhs_nf, x) == lhs(x), (k, lhs_nf, x), lhs(x), nf_apply(lhs_nf, x))
    return reports


@suite("composition_errata")
def check_composition_errata(grid: dict) -> Report:
    """
    Опубликованные показатели λ при ϖ₃ в первом множителе расходятся с поточечной
    композицией ровно на 1; показатель nf_compose совпадает с оракулом.
    """
    report = Report("composition_errata", grid)
    for f in scan_grid(grid["K"], grid["M"], ws=(1,)):
        for g in scan_grid(grid["K"], grid["M"]):
            oracle = nf_apply(g, nf_apply(f, IDENTITY)).i
            printed = printed_exponent(f, g)
            report.record(printed - oracle == 1, (f, g, "printed"), oracle + 1, printed)
            report.record(nf_compose(f, g).m == oracle, (f, g, "nf_compose"), oracle, nf_compose(f, g).m)
    square = nf_apply(VARPI, nf_apply(VARPI, IDENTITY)).i
    report.note = (
        f"printed exponent at k1=k2=1, m1=m2=0 with two varpi factors: "
        f"l{printed_exponent(VARPI, VARPI)}; pointwise: l{square}"
    )
    return report


@suite("semidirect")
def check_semidirect(grid: dict) -> Report:
    report = Report("semidirect", grid)
    sub = scan_grid(grid["K"], grid["M"], ws=(0,))
    pairs = [nf_to_sd(f) for f in sub]
    expected = {SDPair(k, m) for k in range(1, grid["K"] + 1) for m in range(grid["M"] + 1)}
    report.record(set(pairs) == expected and len(pairs) == len(expected), "bijective",
                  len(expected), len(set(pairs)))
    for f in sub:
        report.record(sd_to_nf(nf_to_sd(f)) == f, (f, "inverse"), f, sd_to_nf(nf_to_sd(f)))
        for g in sub:
            lhs = nf_to_sd(nf_compose(f, g))
            rhs = sd_mul(nf_to_sd(f), nf_to_sd(g))
            report.record(lhs == rhs, (f, g), rhs, lhs)
    try:
        nf_to_sd(VARPI)
        report.fail((VARPI, "outside submonoid"), "NotInSubmonoid", "accepted")
    except NotInSubmonoid:
        report.count(1)
    return report


@suite("uniqueness")
def check_uniqueness(grid: dict) -> Report:
    report = Report("normal_form_uniqueness", grid)
    seen: dict[tuple[Elem, Elem], NormalForm] = {}
    for f in scan_grid(grid["K"], grid["M"]):
        signature = (nf_apply(f, Elem(1, 0, 0)), nf_apply(f, IDENTITY))
        report.record(signature not in seen, f, "distinct signature", seen.get(signature))
        seen.setdefault(signature, f)
    return report


# ── Оракулы ──────────────────────────────────────────────────────

@suite("round_trip")
def check_round_trip(grid: dict) -> list[Report]:
    report = Report("round_trip", grid)
    for f in scan_grid(grid["K"], grid["M"]):
        try:
            recovered = decompose(tabulate(f, grid["N"]))
        except BicyclicError as e:
            report.fail(f, f, f"{type(e).__name__}: {e}")
            continue
        report.record(recovered == f, f, f, recovered)

    rejection = Report("middle_layer_rejection", {"N": 2})
    synthetic = tabulate_map(lambda x: Elem(x.i + 5, x.j + 5, 1), 2, "synthetic")
    try:
        decompose(synthetic)
        rejection.fail(synthetic.name, "MiddleLayerIdentityImage", "accepted")
    except MiddleLayerIdentityImage:
        rejection.count(1)
    return [report, rejection]


@suite("right_cancellation")
def check_right_cancellation(grid: dict) -> Report:
    """f∘h = g∘h на окне при инъективном h влечёт f = g; h = λ², путь ϖ₃∘α₍ₖ₎ = α₍ₖ₎∘ϖ₃∘λ^{k−1}."""
    report = Report("right_cancellation", grid)
    h = Shift(2)
    xs = window(grid["N"], F3)
    for k in range(1, grid["k_max"] + 1):
        f = Flip(3).then(Alpha(k))
        g = Alpha(k).then(Flip(3)).then(Shift(k - 1))
        left = [h(f(x)) for x in xs]
        right = [h(g(x)) for x in xs]
        images = {f(x) for x in xs} | {g(x) for x in xs}
        injective = len({h(y) for y in images}) == len(images)
        premise = left == right and injective
        report.record(premise, (k, "premise"), True, False)
        conclusion = all(f(x) == g(x) for x in xs)
        report.record(not premise or conclusion, (k, "cancellation"), True, conclusion)
    return report


@suite("corner_equality")
def check_corner_equality(grid: dict) -> Report:
    """{(m,m,[0))·x·(m,m,[0))} ∩ Window(N) = {y ∈ Window(N) : i, j ≥ m}, всё — образ λ^m."""
    report = Report("corner_equality", grid)
    N = grid["N"]
    xs = window(N, F3)
    for m in grid["m"]:
        image = {sandwich(x, m) for x in xs}
        lam_m = Shift(m)
        for s in sorted(image):
            inside = corner_contains(s, m) and lam_m(corner_unshift(s, m)) == s
            report.record(inside, (m, s, "image of lambda^m"), True, False)
        in_window = {s for s in image if s.i <= N and s.j <= N}
        region = {y for y in xs if y.i >= m and y.j >= m}
        report.record(in_window == region, (m, "set equality"), len(region), len(in_window))
        for y in sorted(in_window ^ region):
            report.fail((m, y), y in region, y in in_window)
    return report


@suite("scan_exclusions")
def check_scan(grid: dict) -> Report:
    return scan_exclusions(grid["K"], grid["M"])


# ── Запуск ───────────────────────────────────────────────────────

def run_suites(config: Optional[SuitesConfig] = None, groups: Iterable[str] = GROUPS,
               include: Iterable[str] = ()) -> list[Report]:
    """Прогнать включённые наборы групп и наборы include; отчёты в порядке реестра."""
    config = config or default_suites_config()
    reports: list[Report] = []
    for spec in config.group(*groups, include=include):
        fn = SUITES.get(spec.name)
        if fn is None:
            logger.warning(f"No implementation for suite '{spec.name}'")
            continue
        logger.debug(f"Suite {spec.name}: grid {spec.grid}")
        result = fn(dict(spec.grid))
        for report in result if isinstance(result, list) else [result]:
            if report.passed:
                logger.info(f"Suite {report.suite}: pass ({report.checks} checks)")
            else:
                logger.warning(f"Suite {report.suite}: FAIL "
                               f"({report.total_counterexamples}/{report.checks} checks)")
            reports.append(report)
    return reports


def core_suite(config: Optional[SuitesConfig] = None) -> list[Report]:
    return run_suites(config, ("core",))


# Наборы core, которые identity_suite выдаёт вместе с endo и oracle
IDENTITY_EXTRA = ("corner_equality",)


def identity_suite(config: Optional[SuitesConfig] = None) -> list[Report]:
    return run_suites(config, ("endo", "oracle"), include=IDENTITY_EXTRA)
