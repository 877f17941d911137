"""
JSON 스키마 테스트
"""

import json
import unittest

from src.catalog import CatalogChecker, get_preset
from src.exact_algebra import RingValue
from src.identity_engine import IdentityEngine, IdentityName
from src.recurrence_core import RecurrenceSpec, generate
from src.serialization import (decode_report, decode_value, decode_window, dumps,
                               encode_crosscheck_row, encode_preset, encode_report,
                               encode_value, encode_window)


class TestValueCodec(unittest.TestCase):
    """값 인코딩 테스트"""

    def test_integers_are_decimal_strings(self):
        big = 3 ** 200
        self.assertEqual(encode_value(RingValue.integer(big)), str(big))
        self.assertEqual(decode_value(str(-big)), RingValue.integer(-big))

    def test_polynomials_are_coefficient_lists(self):
        self.assertEqual(encode_value(RingValue.polynomial((-1, 0, 4))), ["-1", "0", "4"])
        self.assertEqual(encode_value(RingValue.polynomial(())), [])
        self.assertEqual(decode_value(["0", "2"]), RingValue.polynomial((0, 2)))

    def test_rejects_non_decimal(self):
        for bad in ("1.5", "1e3", "", 7, ["1", 2.0]):
            with self.assertRaises(ValueError, msg=repr(bad)):
                decode_value(bad)


class TestDocuments(unittest.TestCase):
    """문서 단위 인코딩 테스트"""

    def test_window(self):
        window = generate(RecurrenceSpec.canonical(RingValue.integer(2), RingValue.integer(1)), 6)
        part = window.slice(2, 5)
        data = encode_window(part)
        self.assertEqual(data, {"lo": 2, "values": ["2", "5", "12", "29"]})
        self.assertEqual(decode_window(json.loads(dumps(data))).values, part.values)

    def test_report_reemits_identically(self):
        report = IdentityEngine().check_catalan(RingValue.polynomial((0, 2)),
                                                RingValue.polynomial((-1,)), 5, 2)
        text = dumps(encode_report(report))
        self.assertEqual(dumps(json.loads(text)), text)
        decoded = decode_report(json.loads(text))
        self.assertEqual(decoded.identity, IdentityName.CATALAN)
        self.assertEqual(decoded.lhs, report.lhs)
        self.assertEqual(decoded.witnesses, report.witnesses)
        self.assertIsNone(decoded.evaluator)

    def test_compact_format(self):
        self.assertEqual(dumps({"a": [1, "2"], "b": None}), '{"a":[1,"2"],"b":null}')

    def test_crosscheck_row(self):
        row = CatalogChecker().crosscheck('two_color_tiling', 4)[3]
        self.assertEqual(encode_crosscheck_row(row), {
            "preset": "two_color_tiling", "n": 3, "recurrence": "6", "explicit": "6",
            "word_count": "6", "tiling_count": "6", "closed_form": None, "agree": True,
        })

    def test_preset(self):
        data = encode_preset(get_preset('chebyshev_U'))
        self.assertEqual(data["ring"], "polynomial")
        self.assertEqual(data["x"], ["0", "2"])
        self.assertEqual(data["eval_point"], 2)
        self.assertEqual(data["word_model"], "alphabet=4; forbid=01")


if __name__ == '__main__':
    unittest.main()
