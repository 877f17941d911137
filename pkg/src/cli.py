"""
recur2 명령줄 인터페이스
수열 생성, 명시적 공식, 항등식 검증, 단어 계수/열거, 교차 검증, 퍼즈 하네스

종료 코드: 0 성공, 1 항등식 불성립, 2 사용법/파싱 오류
"""

import functools
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import click

from .catalog import CatalogChecker, PresetId, get_preset, list_bindings, list_presets
from .errors import Recur2Error
from .exact_algebra import RingValue
from .fuzz_harness import FuzzConfig, FuzzHarness
from .identity_engine import IdentityEngine, IdentityName, IdentityReport, VProductConvention
from .logger_config import log_error_with_context, setup_logger
from .recurrence_core import RecurrenceSpec, VarCoeffSpec, explicit_term, generate
from .serialization import (dumps, encode_crosscheck_row, encode_preset, encode_report,
                            encode_value, encode_window)
from .word_models import (DEFAULT_ENUMERATION_CAP, count_colored_tilings, count_words,
                          enumerate_words, parse_constraint)

EXIT_IDENTITY_FAILED = 1


def _parse_int(text: str) -> int:
    text = text.strip()
    if not text.lstrip('+-').isdigit():
        raise ValueError(f"정수가 아닙니다: {text!r} (부동소수점은 받지 않음)")
    return int(text)


class CoefficientsType(click.ParamType):
    """쉼표로 구분된 오름차순 계수 목록 (예: '0,2' = 2z)"""
    name = "COEFFS"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            return tuple(_parse_int(part) for part in value.split(','))
        except ValueError as e:
            self.fail(f"{e}; 형식: c0,c1,... (오름차순 정수 계수)", param, ctx)


@dataclass(frozen=True)
class ValueList:
    """
    값 목록 입력

    ';' 가 있으면 각 항목이 다항식 계수 목록, 없으면 쉼표로 구분된 정수
    """
    items: Tuple[Tuple[int, ...], ...]
    polynomial: bool


class ValueListType(click.ParamType):
    name = "VALUES"

    def convert(self, value, param, ctx):
        if isinstance(value, ValueList):
            return value
        try:
            if ';' in value:
                items = tuple(tuple(_parse_int(c) for c in chunk.split(',') if c.strip())
                              for chunk in value.split(';'))
                return ValueList(items, True)
            return ValueList(tuple((_parse_int(part),) for part in value.split(',')), False)
        except ValueError as e:
            self.fail(f"{e}; 형식: 정수 'v0,v1,...' 또는 다항식 'c0,c1;c0,c1;...'", param, ctx)


COEFFS = CoefficientsType()
VALUES = ValueListType()


@dataclass(frozen=True)
class Ring:
    """입력으로부터 결정된 환 (다항식 여부)"""
    polynomial: bool

    def coefficient(self, coeffs: Sequence[int]) -> RingValue:
        if self.polynomial:
            return RingValue.polynomial(coeffs)
        return RingValue.integer(coeffs[0])

    def values(self, value_list: ValueList) -> Tuple[RingValue, ...]:
        if self.polynomial:
            return tuple(RingValue.polynomial(item) for item in value_list.items)
        return tuple(RingValue.integer(item[0]) for item in value_list.items)


def _resolve_ring(ring: Optional[str], coefficients: Iterable[Sequence[int]],
                  value_lists: Iterable[Optional[ValueList]] = ()) -> Ring:
    polynomial = (ring == 'poly'
                  or any(len(c) > 1 for c in coefficients)
                  or any(v is not None and v.polynomial for v in value_lists))
    return Ring(polynomial)


def _pair(ring: Ring, value_list: ValueList, flag: str) -> Tuple[RingValue, RingValue]:
    values = ring.values(value_list)
    if len(values) != 2:
        raise click.UsageError(f"{flag} 는 값 2개가 필요합니다: {len(values)}개 입력")
    return values


def domain_errors(func):
    """라이브러리 오류를 사용법 오류(종료 코드 2)로 변환"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except Recur2Error as e:
            logger = click.get_current_context().obj['logger']
            log_error_with_context(logger, e, func.__name__, "인자를 확인하세요 (--help)")
            raise click.UsageError(str(e))
    return wrapper


def _emit(ctx: click.Context, payload, human_lines: Iterable[str]):
    if ctx.obj['json']:
        click.echo(dumps(payload))
    else:
        for line in human_lines:
            click.echo(line)


def _report_lines(report: IdentityReport) -> List[str]:
    mark = "✅ 성립" if report.holds else "❌ 불성립"
    params = ", ".join(f"{key}={value}" for key, value in report.params.items())
    lines = [f"{mark}: {report.identity.value} ({params})",
             f"   lhs = {report.lhs}",
             f"   rhs = {report.rhs}"]
    if not report.holds:
        lines.append("   증거:")
        lines.extend(f"     {key} = {value}" for key, value in report.witnesses.items())
    return lines


def _finish_reports(ctx: click.Context, reports: List[IdentityReport], payload=None):
    """보고서 출력 후 하나라도 불성립이면 종료 코드 1"""
    if payload is None:
        payload = encode_report(reports[0]) if len(reports) == 1 else \
            [encode_report(r) for r in reports]
    lines: List[str] = []
    for report in reports:
        lines.extend(_report_lines(report))
    _emit(ctx, payload, lines)
    if not all(r.holds for r in reports):
        ctx.exit(EXIT_IDENTITY_FAILED)


@click.group()
@click.option('--json', 'as_json', is_flag=True, help='JSON 출력 (압축 형식)')
@click.option('--verbose', '-v', is_flag=True, help='상세 로그 출력 (stderr + logs/)')
@click.pass_context
def cli(ctx: click.Context, as_json: bool, verbose: bool):
    """
    2차 선형 점화식 정확 산술 도구

    a_{n+1} = x·a_n + y·a_{n-1} 의 수열, 행렬식 항등식, 단어 모델을 정확하게 검증합니다.
    """
    ctx.ensure_object(dict)
    ctx.obj['json'] = as_json
    ctx.obj['logger'] = setup_logger(verbose)


def recurrence_options(func):
    """--x --y --ring 공통 옵션"""
    func = click.option('--ring', type=click.Choice(['int', 'poly']), default=None,
                        help='poly 면 0차 입력도 다항식으로 처리')(func)
    func = click.option('--y', 'y_coeffs', type=COEFFS, required=True, help='계수 y')(func)
    func = click.option('--x', 'x_coeffs', type=COEFFS, required=True, help='계수 x')(func)
    return func


@cli.command()
@click.option('--preset', '-p', type=click.Choice([p.value for p in PresetId]),
              help='카탈로그 프리셋')
@click.option('--x', 'x_coeffs', type=COEFFS, help='계수 x')
@click.option('--y', 'y_coeffs', type=COEFFS, help='계수 y')
@click.option('--init', 'init', type=VALUES, help='초기값 a_0,a_1 (기본 0,1)')
@click.option('--ring', type=click.Choice(['int', 'poly']), default=None)
@click.option('--from', 'lo', type=click.IntRange(min=0), default=0, help='시작 인덱스')
@click.option('--to', 'hi', type=click.IntRange(min=0), required=True, help='마지막 인덱스')
@click.pass_context
@domain_errors
def seq(ctx, preset, x_coeffs, y_coeffs, init, ring, lo, hi):
    """수열 윈도우 [from..to] 생성"""
    if preset:
        if x_coeffs or y_coeffs or init:
            raise click.UsageError("--preset 와 --x/--y/--init 는 함께 쓸 수 없습니다")
        spec = get_preset(preset).spec
    else:
        if not (x_coeffs and y_coeffs):
            raise click.UsageError("--preset 또는 --x 와 --y 가 필요합니다")
        resolved = _resolve_ring(ring, (x_coeffs, y_coeffs), (init,))
        x, y = resolved.coefficient(x_coeffs), resolved.coefficient(y_coeffs)
        spec = RecurrenceSpec(x, y, _pair(resolved, init, '--init')) if init \
            else RecurrenceSpec.canonical(x, y)

    if lo > hi:
        raise click.UsageError(f"--from {lo} 가 --to {hi} 보다 큽니다")
    window = generate(spec, hi).slice(lo, hi)
    _emit(ctx, encode_window(window),
          (f"a_{n} = {value}" for n, value in zip(range(lo, hi + 1), window.values)))


@cli.command()
@recurrence_options
@click.option('--n', type=click.IntRange(min=0), required=True, help='인덱스')
@click.pass_context
@domain_errors
def explicit(ctx, x_coeffs, y_coeffs, ring, n):
    """명시적 공식 a_n = Σ C(n-1-k, k)·x^(n-2k-1)·y^k"""
    resolved = _resolve_ring(ring, (x_coeffs, y_coeffs))
    value = explicit_term(resolved.coefficient(x_coeffs), resolved.coefficient(y_coeffs), n)
    _emit(ctx, {"n": n, "value": encode_value(value)}, [f"a_{n} = {value}"])


@cli.group()
def verify():
    """행렬식 항등식 검증 (불성립 시 종료 코드 1)"""


def _engine(ctx: click.Context) -> IdentityEngine:
    return IdentityEngine(ctx.obj['logger'])


@verify.command('docagne')
@recurrence_options
@click.option('--b', 'b', type=VALUES, required=True, help='b_0,b_1')
@click.option('--c', 'c', type=VALUES, required=True, help='c_0,c_1')
@click.option('--k', type=click.IntRange(min=0), required=True)
@click.option('--m', type=click.IntRange(min=0), required=True)
@click.pass_context
@domain_errors
def verify_docagne(ctx, x_coeffs, y_coeffs, ring, b, c, k, m):
    """|b_k b_{k+m}; c_k c_{k+m}| = (-y)^k·a_m·|b_0 b_1; c_0 c_1|"""
    r = _resolve_ring(ring, (x_coeffs, y_coeffs), (b, c))
    report = _engine(ctx).check_docagne_general(
        r.coefficient(x_coeffs), r.coefficient(y_coeffs),
        _pair(r, b, '--b'), _pair(r, c, '--c'), k, m)
    _finish_reports(ctx, [report])


@verify.command('var-coeff')
@click.option('--u', 'u', type=VALUES, required=True, help='u_0,u_1,...')
@click.option('--v', 'v', type=VALUES, required=True, help='v_0,v_1,...')
@click.option('--ring', type=click.Choice(['int', 'poly']), default=None)
@click.option('--b', 'b', type=VALUES, required=True, help='b_0,b_1')
@click.option('--c', 'c', type=VALUES, required=True, help='c_0,c_1')
@click.option('--k', type=click.IntRange(min=0), required=True)
@click.option('--n', type=click.IntRange(min=0), required=True)
@click.option('--convention', type=click.Choice([c.value for c in VProductConvention]),
              default=VProductConvention.ZERO_BASED.value, help='v 곱 범위')
@click.pass_context
@domain_errors
def verify_var_coeff(ctx, u, v, ring, b, c, k, n, convention):
    """가변 계수: |b_k b_{n+2}; c_k c_{n+2}| = (-1)^k·(v_0⋯v_{k-1})·a_{n-k+2}·|b_0 b_1; c_0 c_1|"""
    r = _resolve_ring(ring, (), (u, v, b, c))
    b_init = _pair(r, b, '--b')
    spec = VarCoeffSpec(r.values(u), r.values(v), b_init)
    report = _engine(ctx).check_variable_coefficient(
        spec, b_init, _pair(r, c, '--c'), k, n, VProductConvention(convention))
    _finish_reports(ctx, [report])


verify.add_command(verify_var_coeff, 'prop8')


@verify.command('cassini')
@recurrence_options
@click.option('--b', 'b', type=VALUES, required=True)
@click.option('--c', 'c', type=VALUES, required=True)
@click.option('--k', type=click.IntRange(min=0), required=True)
@click.pass_context
@domain_errors
def verify_cassini(ctx, x_coeffs, y_coeffs, ring, b, c, k):
    """|b_k b_{k+1}; c_k c_{k+1}| = (-y)^k·|b_0 b_1; c_0 c_1|"""
    r = _resolve_ring(ring, (x_coeffs, y_coeffs), (b, c))
    report = _engine(ctx).check_cassini(
        r.coefficient(x_coeffs), r.coefficient(y_coeffs),
        _pair(r, b, '--b'), _pair(r, c, '--c'), k)
    _finish_reports(ctx, [report])


@verify.command('index-reduction')
@recurrence_options
@click.option('--b', 'b', type=VALUES, required=True)
@click.option('--c', 'c', type=VALUES, required=True)
@click.option('--k', type=click.IntRange(min=0), required=True)
@click.option('--m', type=click.IntRange(min=0), required=True)
@click.option('--p', type=click.IntRange(min=0), required=True)
@click.pass_context
@domain_errors
def verify_index_reduction(ctx, x_coeffs, y_coeffs, ring, b, c, k, m, p):
    """|b_k b_{k+m}; c_k c_{k+m}| = (-y)^p·|b_{k-p} b_{k-p+m}; c_{k-p} c_{k-p+m}|"""
    r = _resolve_ring(ring, (x_coeffs, y_coeffs), (b, c))
    report = _engine(ctx).check_index_reduction(
        r.coefficient(x_coeffs), r.coefficient(y_coeffs),
        _pair(r, b, '--b'), _pair(r, c, '--c'), k, m, p)
    _finish_reports(ctx, [report])


@verify.command('reduced-docagne')
@recurrence_options
@click.option('--b', 'b', type=VALUES, required=True)
@click.option('--c', 'c', type=VALUES, required=True)
@click.option('--m', type=click.IntRange(min=0), required=True)
@click.pass_context
@domain_errors
def verify_reduced_docagne(ctx, x_coeffs, y_coeffs, ring, b, c, m):
    """a_m·|b_0 b_1; c_0 c_1| = |b_0 b_m; c_0 c_m|"""
    r = _resolve_ring(ring, (x_coeffs, y_coeffs), (b, c))
    report = _engine(ctx).check_reduced_docagne(
        r.coefficient(x_coeffs), r.coefficient(y_coeffs),
        _pair(r, b, '--b'), _pair(r, c, '--c'), m)
    _finish_reports(ctx, [report])


@verify.command('four-param')
@recurrence_options
@click.option('--b', 'b', type=VALUES, required=True)
@click.option('--k', type=click.IntRange(min=0), required=True)
@click.option('--m', type=click.IntRange(min=0), required=True)
@click.option('--p', type=click.IntRange(min=0), required=True)
@click.option('--q', type=click.IntRange(min=0), required=True)
@click.pass_context
@domain_errors
def verify_four_param(ctx, x_coeffs, y_coeffs, ring, b, k, m, p, q):
    """|b_{k+p} b_{m+p}; a_{k+q} a_{m+q}| = (-y)^{k+q}·a_{m-k}·b_{p-q}"""
    r = _resolve_ring(ring, (x_coeffs, y_coeffs), (b,))
    report = _engine(ctx).check_four_param(
        r.coefficient(x_coeffs), r.coefficient(y_coeffs), _pair(r, b, '--b'), k, m, p, q)
    _finish_reports(ctx, [report])


@verify.command('vajda')
@recurrence_options
@click.option('--b', 'b', type=VALUES, required=True)
@click.option('--k', type=click.IntRange(min=0), required=True)
@click.option('--m', type=click.IntRange(min=0), required=True)
@click.option('--p', type=click.IntRange(min=0), required=True)
@click.pass_context
@domain_errors
def verify_vajda(ctx, x_coeffs, y_coeffs, ring, b, k, m, p):
    """|b_{k+p} b_{k+m+p}; a_k a_{k+m}| = (-y)^k·a_m·b_p"""
    r = _resolve_ring(ring, (x_coeffs, y_coeffs), (b,))
    report = _engine(ctx).check_vajda(
        r.coefficient(x_coeffs), r.coefficient(y_coeffs), _pair(r, b, '--b'), k, m, p)
    _finish_reports(ctx, [report])


@verify.command('catalan')
@recurrence_options
@click.option('--n', type=click.IntRange(min=0), required=True)
@click.option('--r', 'r_index', type=click.IntRange(min=0), required=True)
@click.pass_context
@domain_errors
def verify_catalan(ctx, x_coeffs, y_coeffs, ring, n, r_index):
    """a_n² − a_{n-r}·a_{n+r} = (-y)^{n-r}·a_r²"""
    r = _resolve_ring(ring, (x_coeffs, y_coeffs))
    report = _engine(ctx).check_catalan(
        r.coefficient(x_coeffs), r.coefficient(y_coeffs), n, r_index)
    _finish_reports(ctx, [report])


@verify.command('recover-a')
@recurrence_options
@click.option('--b', 'b', type=VALUES, required=True, help='b 윈도우 b_0..b_{k+m}')
@click.option('--c', 'c', type=VALUES, required=True, help='c 윈도우 c_0..c_{k+m}')
@click.option('--k', type=click.IntRange(min=0), required=True)
@click.option('--m', type=click.IntRange(min=0), required=True)
@click.pass_context
@domain_errors
def verify_recover_a(ctx, x_coeffs, y_coeffs, ring, b, c, k, m):
    """두 윈도우로 a_m 복원 후 점화식 값과 비교"""
    r = _resolve_ring(ring, (x_coeffs, y_coeffs), (b, c))
    report = _engine(ctx).check_recover_a(
        r.coefficient(x_coeffs), r.coefficient(y_coeffs), r.values(b), r.values(c), k, m)
    _finish_reports(ctx, [report])


@cli.group()
def words():
    """제약 단어 계수/열거"""


@words.command('count')
@click.option('--spec', 'spec_text', required=True,
              help="제약 DSL (예: 'alphabet=3; forbid=01,02; evenrun=0')")
@click.option('--n', type=click.IntRange(min=0), required=True, help='단어 길이')
@click.pass_context
@domain_errors
def words_count(ctx, spec_text, n):
    """오토마톤 DP 로 길이 n 허용 단어 수 계산"""
    constraint = parse_constraint(spec_text)
    count = count_words(constraint, n)
    _emit(ctx, {"spec": constraint.to_text(), "n": n, "count": str(count)}, [str(count)])


@words.command('enumerate')
@click.option('--spec', 'spec_text', required=True, help='제약 DSL')
@click.option('--n', type=click.IntRange(min=0), required=True, help='단어 길이')
@click.option('--cap', type=click.IntRange(min=1), default=DEFAULT_ENUMERATION_CAP,
              envvar='RECUR2_CAP', show_default=True, help='σ^n 상한 (RECUR2_CAP)')
@click.pass_context
@domain_errors
def words_enumerate(ctx, spec_text, n, cap):
    """허용 단어 전수 열거 (사전순)"""
    constraint = parse_constraint(spec_text)
    found = enumerate_words(constraint, n, cap)
    _emit(ctx, {"spec": constraint.to_text(), "n": n, "count": str(len(found)), "words": found},
          found)


@cli.command()
@click.option('--n', type=click.IntRange(min=0), required=True, help='판 길이')
@click.option('--colors1', type=click.IntRange(min=1), required=True, help='길이 1 타일 색 수')
@click.option('--colors2', type=click.IntRange(min=1), required=True, help='길이 2 타일 색 수')
@click.pass_context
@domain_errors
def tilings(ctx, n, colors1, colors2):
    """1×n 판의 색칠 타일링 수"""
    count = count_colored_tilings(n, colors1, colors2)
    _emit(ctx, {"n": n, "colors1": colors1, "colors2": colors2, "count": str(count)},
          [str(count)])


def _preset_selection(preset: Optional[str], select_all: bool) -> List[str]:
    if bool(preset) == select_all:
        raise click.UsageError("--preset 또는 --all 중 하나만 지정하세요")
    return [p.value for p in PresetId] if select_all else [preset]


@cli.command()
@click.option('--preset', '-p', type=click.Choice([p.value for p in PresetId]))
@click.option('--all', 'select_all', is_flag=True, help='모든 프리셋')
@click.option('--max-n', type=click.IntRange(min=2), default=12, show_default=True)
@click.pass_context
@domain_errors
def crosscheck(ctx, preset, select_all, max_n):
    """점화식 / 명시적 공식 / 단어 수 / 닫힌 형태 교차 검증"""
    checker = CatalogChecker(ctx.obj['logger'])
    rows = []
    for preset_id in _preset_selection(preset, select_all):
        rows.extend(checker.crosscheck(preset_id, max_n))

    def cell(value) -> str:
        return "-" if value is None else str(value)

    lines = [f"{row.preset.value:<17} n={row.n:<3} rec={row.recurrence}  exp={row.explicit}  "
             f"words={cell(row.word_count)}  tilings={cell(row.tiling_count)}  "
             f"closed={cell(row.closed_form)}  {'✅' if row.agree else '❌'}"
             for row in rows]
    _emit(ctx, [encode_crosscheck_row(row) for row in rows], lines)
    if not all(row.agree for row in rows):
        ctx.exit(EXIT_IDENTITY_FAILED)


@cli.command()
@click.option('--preset', '-p', type=click.Choice([p.value for p in PresetId]))
@click.option('--all', 'select_all', is_flag=True, help='모든 바인딩')
@click.option('--max-index', type=click.IntRange(min=0), default=None,
              help='바인딩 기본 범위 대신 쓸 최대 인덱스')
@click.pass_context
@domain_errors
def bindings(ctx, preset, select_all, max_index):
    """카탈로그 항등식 바인딩 실행"""
    if bool(preset) == select_all:
        raise click.UsageError("--preset 또는 --all 중 하나만 지정하세요")
    outcomes = CatalogChecker(ctx.obj['logger']).check_bindings(preset, max_index)
    failed = [o for o in outcomes if not o.ok]
    summary = [f"바인딩 {len(list_bindings(preset))}개, 검증 {len(outcomes)}건, 실패 {len(failed)}건"]
    for outcome in failed:
        if not outcome.named_ok:
            summary.append(f"❌ {outcome.binding}: 고전 형태 불일치")
        summary.extend(_report_lines(outcome.report))
    failures = [{"binding": o.binding, "named_ok": o.named_ok, **encode_report(o.report)}
                for o in failed]
    _emit(ctx, {"checked": len(outcomes), "failures": failures}, summary)
    if failed:
        ctx.exit(EXIT_IDENTITY_FAILED)


@cli.command()
@click.option('--seed', type=int, required=True, help='난수 시드 (필수)')
@click.option('--trials', type=click.IntRange(min=1), default=1000, show_default=True)
@click.option('--coeff-max', type=click.IntRange(min=1), default=9, show_default=True)
@click.option('--init-max', type=click.IntRange(min=0), default=9, show_default=True)
@click.option('--index-max', type=click.IntRange(min=0), default=25, show_default=True)
@click.option('--identity', 'identities', multiple=True,
              type=click.Choice([name.value for name in IdentityName]),
              help='대상 항등식 (반복 가능, 기본 전체)')
@click.pass_context
@domain_errors
def fuzz(ctx, seed, trials, coeff_max, init_max, index_max, identities):
    """시드 기반 무작위 인스턴스로 모든 검증기 실행"""
    config = FuzzConfig(seed, trials, coeff_max, init_max, index_max,
                        tuple(IdentityName(i) for i in identities) or tuple(IdentityName))
    summary = FuzzHarness(ctx.obj['logger']).run(config)

    lines = [f"시행: {summary.trials}",
             "항등식: " + ", ".join(f"{name}={count}" for name, count in summary.covered.items()),
             f"실패: {len(summary.failures)}"]
    for report in summary.failures:
        lines.extend(_report_lines(report))
    _emit(ctx, {"seed": summary.seed, "trials": summary.trials, "covered": summary.covered,
                "failures": [encode_report(r) for r in summary.failures]}, lines)
    if not summary.ok:
        ctx.exit(EXIT_IDENTITY_FAILED)


@cli.command()
@click.pass_context
def presets(ctx):
    """프리셋 목록"""
    items = list_presets()

    def line(preset) -> str:
        init = ", ".join(str(v) for v in preset.init)
        model = preset.word_model
        words_text = "-"
        if model is not None:
            parts = []
            if model.constraint is not None:
                parts.append(model.constraint.to_text())
            if model.tiling is not None:
                parts.append(f"tiling={model.tiling[0]},{model.tiling[1]}")
            if model.eval_point is not None:
                parts.append(f"@{model.eval_point}")
            words_text = " ".join(parts)
        return (f"{preset.id.value:<17} {preset.tag.value:<10} x={preset.x}  y={preset.y}  "
                f"init=({init})  words: {words_text}")

    _emit(ctx, [encode_preset(p) for p in items], [line(p) for p in items])


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    프로그램 방식 실행

    Returns:
        종료 코드 (0 성공, 1 항등식 불성립, 2 사용법 오류)
    """
    try:
        result = cli.main(args=list(argv) if argv is not None else None,
                          prog_name='recur2', standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("중단되었습니다", err=True)
        return 1
    return result if isinstance(result, int) else 0
