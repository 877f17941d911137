"""
CLI JSON 스키마 인코딩/디코딩

정수는 10진 문자열, 다항식은 오름차순 계수의 10진 문자열 리스트로 직렬화
(부동소수점은 어디에서도 쓰지 않음)
"""

import json
from typing import Any, Dict, List, Union

from .exact_algebra import RingTag, RingValue
from .identity_engine import IdentityName, IdentityReport
from .recurrence_core import SequenceWindow

JsonValue = Union[str, List[str]]


def dumps(payload: Any) -> str:
    """압축 JSON (parse → re-emit 이 바이트 단위로 동일)"""
    return json.dumps(payload, separators=(',', ':'), ensure_ascii=False)


def encode_value(value: RingValue) -> JsonValue:
    if value.tag is RingTag.INTEGER:
        return str(value.payload)
    return [str(c) for c in value.payload.coefficients]


def decode_value(data: JsonValue) -> RingValue:
    """
    JSON 값 → RingValue

    Raises:
        ValueError: 10진 정수 문자열이 아닌 경우
    """
    if isinstance(data, list):
        return RingValue.polynomial(_decimal(c) for c in data)
    return RingValue.integer(_decimal(data))


def _decimal(text: Any) -> int:
    if not isinstance(text, str) or not text.lstrip('-').isdigit():
        raise ValueError(f"10진 정수 문자열이 아닙니다: {text!r}")
    return int(text)


def encode_window(window: SequenceWindow) -> Dict[str, Any]:
    return {"lo": window.lo, "values": [encode_value(v) for v in window.values]}


def decode_window(data: Dict[str, Any]) -> SequenceWindow:
    return SequenceWindow(None, int(data["lo"]), tuple(decode_value(v) for v in data["values"]))


def encode_report(report: IdentityReport) -> Dict[str, Any]:
    return {
        "identity": report.identity.value,
        "params": dict(report.params),
        "lhs": encode_value(report.lhs),
        "rhs": encode_value(report.rhs),
        "holds": report.holds,
        "witnesses": {key: encode_value(v) for key, v in report.witnesses.items()},
    }


def decode_report(data: Dict[str, Any]) -> IdentityReport:
    """재계산 함수 없는 보고서로 복원"""
    return IdentityReport(
        identity=IdentityName(data["identity"]),
        params={key: int(v) for key, v in data["params"].items()},
        lhs=decode_value(data["lhs"]),
        rhs=decode_value(data["rhs"]),
        holds=bool(data["holds"]),
        witnesses={key: decode_value(v) for key, v in data["witnesses"].items()},
    )


def encode_crosscheck_row(row) -> Dict[str, Any]:
    return {
        "preset": row.preset.value,
        "n": row.n,
        "recurrence": encode_value(row.recurrence),
        "explicit": encode_value(row.explicit),
        "word_count": None if row.word_count is None else str(row.word_count),
        "tiling_count": None if row.tiling_count is None else str(row.tiling_count),
        "closed_form": row.closed_form,
        "agree": row.agree,
    }


def encode_preset(preset) -> Dict[str, Any]:
    model = preset.word_model
    return {
        "id": preset.id.value,
        "ring": preset.tag.value,
        "x": encode_value(preset.x),
        "y": encode_value(preset.y),
        "init": [encode_value(v) for v in preset.init],
        "word_model": None if model is None or model.constraint is None else model.constraint.to_text(),
        "tiling": None if model is None or model.tiling is None else list(model.tiling),
        "eval_point": None if model is None else model.eval_point,
        "closed_form": None if preset.closed_form is None else preset.closed_form.description,
    }
