#!/usr/bin/env python3
"""
Командная строка — арифметика B_ω^{F^n}, нормальные формы эндоморфизмов
B_ω^{F³}, таблицы и наборы проверок.

Запуск:
  python cli.py mul "(1,1,0)" "(0,0,2)"
  python cli.py compose a1.l0.w1 a1.l0.w1
  python cli.py decompose --from-file table.json --json
  python cli.py suite --K 3

Коды выхода: 0 — успех, 1 — проверка не прошла или таблица не
классифицируется, 2 — ошибка разбора или недопустимый ввод.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional

PLATFORM_ROOT = Path(__file__).resolve().parent
sys.path.insert(0, str(PLATFORM_ROOT))

from core.config import load_config
from core.errors import (
    BicyclicError,
    MiddleLayerIdentityImage,
    NonPositiveK,
    NotClassifiable,
)
from core.logging import format_reports, save_report
from core.semigroup import F3, Family, d_related, inv, make_family, mul, nat_leq
from core.suites import load_suites_config
from core.text import elem_to_json, format_elem, parse_elem, parse_family
from endo.normal_form import format_nf, nf_apply, nf_compose, nf_from_word, nf_to_json
from endo.semidirect import format_sd, parse_sd, sd_mul, sd_to_json
from oracle import (
    Report,
    decompose_report,
    layer_behaviour,
    load_table,
    run_suites,
    scan_exclusions,
    tabulate,
    verify_homomorphism,
    verify_injective,
)

logger = logging.getLogger("cli")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# Ошибки классификации: «проверка не прошла», а не ошибка ввода
CLASSIFICATION_ERRORS = (NotClassifiable, MiddleLayerIdentityImage, NonPositiveK)


class UsageError(Exception):
    """Ошибка использования, обнаруженная после argparse."""


# ── Вывод ────────────────────────────────────────────────────────

def _emit(args, text: str, payload):
    if args.json:
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(text)


def _diag(message: str):
    print(f"error: {message}", file=sys.stderr)


def _parse_form(text: str):
    """Литерал a<k>.l<m>.w<w> или слово из порождающих через пробел."""
    return nf_from_word(text.split())


def _family(args, cfg: dict) -> Family:
    if args.family:
        return parse_family(args.family)
    return make_family(cfg["family"])


def _limit(reports: list[Report], limit: int) -> list[Report]:
    for r in reports:
        r.limit = limit
        r.counterexamples = r.counterexamples[:max(limit, 1)]
    return reports


def _reports_payload(reports: list[Report]) -> dict:
    status = "pass" if all(r.passed for r in reports) else "fail"
    return {"status": status, "reports": [r.to_json() for r in reports]}


def _finish_reports(args, cfg: dict, verb: str, reports: list[Report]) -> int:
    payload = _reports_payload(reports)
    _emit(args, format_reports(payload["reports"]), payload)
    _maybe_save(args, cfg, verb, payload)
    return EXIT_OK if payload["status"] == "pass" else EXIT_FAIL


def _maybe_save(args, cfg: dict, verb: str, payload: dict):
    if args.save or cfg["reports"]["save"]:
        save_report(cfg["reports"]["dir"], verb, payload)


def _table(args, cfg: dict):
    """Таблица из --from-file либо табуляция литерала на Window(--N)."""
    if args.from_file and args.form:
        raise UsageError("give either --from-file or a normal form, not both")
    if args.from_file:
        return load_table(args.from_file)
    if not args.form:
        raise UsageError("a normal form literal or --from-file is required")
    N = args.N if args.N is not None else cfg["grids"]["N"]
    return tabulate(_parse_form(args.form), N)


# ── Команды ──────────────────────────────────────────────────────

def cmd_mul(args, cfg):
    fam = _family(args, cfg)
    c = mul(parse_elem(args.a), parse_elem(args.b), fam)
    _emit(args, format_elem(c), elem_to_json(c))
    return EXIT_OK


def cmd_inv(args, cfg):
    a = _family(args, cfg).check(parse_elem(args.a))
    _emit(args, format_elem(inv(a)), elem_to_json(inv(a)))
    return EXIT_OK


def cmd_order(args, cfg):
    fam = _family(args, cfg)
    a, b = fam.check(parse_elem(args.a)), fam.check(parse_elem(args.b))
    result = nat_leq(a, b, fam)
    _emit(args, str(result).lower(), {"result": result})
    return EXIT_OK


def cmd_drel(args, cfg):
    fam = _family(args, cfg)
    a, b = fam.check(parse_elem(args.a)), fam.check(parse_elem(args.b))
    result = d_related(a, b)
    _emit(args, str(result).lower(), {"result": result})
    return EXIT_OK


def cmd_apply(args, cfg):
    f = _parse_form(args.form)
    y = nf_apply(f, F3.check(parse_elem(args.x)))
    _emit(args, format_elem(y), elem_to_json(y))
    return EXIT_OK


def cmd_compose(args, cfg):
    h = nf_compose(_parse_form(args.f), _parse_form(args.g))
    _emit(args, format_nf(h), nf_to_json(h))
    return EXIT_OK


def cmd_normalize(args, cfg):
    f = nf_from_word(args.tokens)
    _emit(args, format_nf(f), nf_to_json(f))
    return EXIT_OK


def cmd_sd(args, cfg):
    c = sd_mul(parse_sd(args.a), parse_sd(args.b))
    _emit(args, format_sd(c), sd_to_json(c))
    return EXIT_OK


def cmd_decompose(args, cfg):
    T = _table(args, cfg)
    try:
        f, report = decompose_report(T)
    except CLASSIFICATION_ERRORS as e:
        _diag(f"{type(e).__name__}: {e} (layers: {layer_behaviour(T)})")
        return EXIT_FAIL
    payload = {
        "form": nf_to_json(f),
        "window": T.domain_bound,
        "layers": layer_behaviour(T),
        "note": report.note,
    }
    _emit(args, f"{format_nf(f)}\n{report.note}", payload)
    _maybe_save(args, cfg, "decompose", payload)
    return EXIT_OK


def cmd_verify(args, cfg):
    T = _table(args, cfg)
    limit = cfg["counterexample_limit"]
    reports = [
        verify_homomorphism(T, T.domain_bound // 2, limit=limit),
        verify_injective(T, limit=limit),
    ]
    return _finish_reports(args, cfg, "verify", reports)


def cmd_scan(args, cfg):
    K = args.K if args.K is not None else cfg["grids"]["K"]
    M = args.M if args.M is not None else cfg["grids"]["M"]
    report = scan_exclusions(K, M, limit=cfg["counterexample_limit"])
    return _finish_reports(args, cfg, "scan", [report])


def cmd_suite(args, cfg):
    suites = load_suites_config(cfg["suites_file"] or None).with_overrides(K=args.K, M=args.M, N=args.N)
    reports = _limit(run_suites(suites), cfg["counterexample_limit"])
    return _finish_reports(args, cfg, "suite", reports)


# ── Разбор аргументов ────────────────────────────────────────────

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--family", help="ray starts, e.g. 0,1,2 (mul, inv, order, drel)")
    common.add_argument("--save", action="store_true", help="save the JSON report")
    common.add_argument("--config", help="directory with config.json, .env, suites.yaml")

    parser = argparse.ArgumentParser(prog="cli.py", description="Bicyclic extension toolkit")
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=fn)
        return p

    p = verb("mul", cmd_mul, "product of two elements")
    p.add_argument("a")
    p.add_argument("b")
    p = verb("inv", cmd_inv, "inverse element")
    p.add_argument("a")
    p = verb("order", cmd_order, "natural partial order a ≼ b")
    p.add_argument("a")
    p.add_argument("b")
    p = verb("drel", cmd_drel, "D-relatedness")
    p.add_argument("a")
    p.add_argument("b")
    p = verb("apply", cmd_apply, "apply a normal form to an element")
    p.add_argument("form")
    p.add_argument("x")
    p = verb("compose", cmd_compose, "compose f then g")
    p.add_argument("f")
    p.add_argument("g")
    p = verb("normalize", cmd_normalize, "normalise a word over generators")
    p.add_argument("tokens", nargs="+")
    p = verb("sd", cmd_sd, "product in the semidirect model")
    p.add_argument("a")
    p.add_argument("b")

    for name, fn, help_text in (
        ("decompose", cmd_decompose, "recover the normal form of a table"),
        ("verify", cmd_verify, "check a table for homomorphism and injectivity"),
    ):
        p = verb(name, fn, help_text)
        p.add_argument("form", nargs="?")
        p.add_argument("--from-file", dest="from_file")
        p.add_argument("--N", type=int)

    p = verb("scan", cmd_scan, "exclusion scan over classified forms")
    p.add_argument("--K", type=int)
    p.add_argument("--M", type=int)
    p = verb("suite", cmd_suite, "run all law suites")
    p.add_argument("--K", type=int)
    p.add_argument("--M", type=int)
    p.add_argument("--N", type=int)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    cfg = load_config(args.config)
    logging.basicConfig(
        level=getattr(logging, str(cfg["log_level"]).upper(), logging.WARNING),
        format="%(asctime)s [%(levelname)s] %(message)s",
        datefmt="%H:%M:%S",
        force=True,
    )
    logger.debug(f"Verb {args.verb}, config from {cfg['config_dir']}")

    try:
        return args.handler(args, cfg)
    except UsageError as e:
        _diag(str(e))
        return EXIT_USAGE
    except CLASSIFICATION_ERRORS as e:
        _diag(f"{type(e).__name__}: {e}")
        return EXIT_FAIL
    except BicyclicError as e:
        _diag(f"{type(e).__name__}: {e}")
        return EXIT_USAGE
    except OSError as e:
        _diag(f"cannot read {e.filename}: {e.strerror}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
