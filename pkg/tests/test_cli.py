"""
CLI 테스트
출력 형식, 종료 코드, JSON 스키마, 환경 변수
"""

import json
import unittest

from click.testing import CliRunner

from src.cli import cli, run
from src.serialization import decode_report, decode_window, dumps
from src.exact_algebra import RingValue


class CliTestCase(unittest.TestCase):

    def setUp(self):
        self.runner = CliRunner()

    def invoke(self, *args, env=None):
        return self.runner.invoke(cli, list(args), env=env)


class TestSeqAndExplicit(CliTestCase):
    """seq / explicit 명령"""

    def test_mersenne_json(self):
        result = self.invoke('--json', 'seq', '--preset', 'mersenne', '--to', '6')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(result.output.strip(),
                         '{"lo":0,"values":["0","1","3","7","15","31","63"]}')

    def test_window_from(self):
        result = self.invoke('--json', 'seq', '--preset', 'pell', '--from', '3', '--to', '5')
        window = decode_window(json.loads(result.output))
        self.assertEqual(window.lo, 3)
        self.assertEqual(window.values, tuple(RingValue.integer(v) for v in (5, 12, 29)))

    def test_human_output(self):
        result = self.invoke('seq', '--x', '1', '--y', '1', '--init', '2,1', '--to', '4')
        self.assertEqual(result.exit_code, 0)
        self.assertIn("a_4 = 7", result.output)

    def test_polynomial_coefficients(self):
        result = self.invoke('seq', '--x', '0,2', '--y', '-1', '--to', '3')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("a_3 = 4z^2 - 1", result.output)

        result = self.invoke('--json', 'seq', '--x', '0,2', '--y', '-1', '--to', '2')
        self.assertEqual(result.output.strip(), '{"lo":0,"values":[[],["1"],["0","2"]]}')

    def test_ring_flag_promotes_constants(self):
        result = self.invoke('--json', 'seq', '--x', '2', '--y', '1', '--ring', 'poly', '--to', '2')
        self.assertEqual(result.output.strip(), '{"lo":0,"values":[[],["1"],["2"]]}')

    def test_usage_errors(self):
        self.assertEqual(self.invoke('seq', '--preset', 'pell', '--x', '1', '--to', '3').exit_code, 2)
        self.assertEqual(self.invoke('seq', '--to', '3').exit_code, 2)
        self.assertEqual(self.invoke('seq', '--preset', 'pell', '--from', '5', '--to', '3').exit_code, 2)
        self.assertEqual(self.invoke('seq', '--x', '1.5', '--y', '1', '--to', '3').exit_code, 2)
        self.assertEqual(self.invoke('seq', '--x', '1', '--y', '0', '--to', '3').exit_code, 2)
        self.assertEqual(self.invoke('seq', '--preset', 'tribonacci', '--to', '3').exit_code, 2)

    def test_explicit(self):
        result = self.invoke('explicit', '--x', '1', '--y', '1', '--n', '10')
        self.assertEqual(result.exit_code, 0)
        self.assertIn("a_10 = 55", result.output)

        result = self.invoke('--json', 'explicit', '--x', '3', '--y', '-2', '--n', '4')
        self.assertEqual(json.loads(result.output), {"n": 4, "value": "15"})


class TestVerify(CliTestCase):
    """verify 하위 명령"""

    def test_docagne(self):
        result = self.invoke('verify', 'docagne', '--x', '2', '--y', '3', '--b', '1,4',
                             '--c', '2,1', '--k', '1', '--m', '2')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("42", result.output)
        self.assertIn("✅", result.output)

    def test_docagne_json_report(self):
        result = self.invoke('--json', 'verify', 'docagne', '--x', '2', '--y', '3', '--b', '1,4',
                             '--c', '2,1', '--k', '1', '--m', '2')
        text = result.output.strip()
        data = json.loads(text)
        self.assertEqual(data["lhs"], "42")
        self.assertTrue(data["holds"])
        self.assertEqual(dumps(data), text)
        report = decode_report(data)
        self.assertEqual(report.rhs, RingValue.integer(42))

    def test_prop8_alias_and_convention(self):
        args = ['verify', 'prop8', '--u', '1,2,3,4', '--v', '5,1,2', '--b', '1,0', '--c', '0,1',
                '--k', '1', '--n', '1']
        self.assertEqual(self.invoke(*args).exit_code, 0)
        self.assertEqual(self.invoke('verify', 'var-coeff', *args[2:]).exit_code, 0)

        result = self.invoke(*args, '--convention', 'one-based')
        self.assertEqual(result.exit_code, 1)
        self.assertIn("❌", result.output)
        self.assertIn("rhs = -3", result.output)

    def test_specializations(self):
        cases = [
            ['cassini', '--x', '1', '--y', '1', '--b', '2,1', '--c', '0,1', '--k', '3'],
            ['index-reduction', '--x', '1', '--y', '1', '--b', '1,1', '--c', '0,1',
             '--k', '3', '--m', '2', '--p', '2'],
            ['reduced-docagne', '--x', '1', '--y', '1', '--b', '1,1', '--c', '2,3', '--m', '4'],
            ['four-param', '--x', '1', '--y', '1', '--b', '0,1',
             '--k', '1', '--m', '2', '--p', '3', '--q', '2'],
            ['vajda', '--x', '3', '--y', '-2', '--b', '0,1', '--k', '1', '--m', '2', '--p', '1'],
            ['catalan', '--x', '2', '--y', '1', '--n', '4', '--r', '2'],
            ['recover-a', '--x', '2', '--y', '3', '--b', '1,4,11,34', '--c', '2,1,8,19',
             '--k', '1', '--m', '2'],
        ]
        for case in cases:
            result = self.invoke('verify', *case)
            self.assertEqual(result.exit_code, 0, (case, result.output))

    def test_polynomial_cassini(self):
        result = self.invoke('--json', 'verify', 'cassini', '--x', '0,2', '--y', '-1',
                             '--b', '0,1;-1,0,2', '--c', '1;0,1', '--k', '1')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(json.loads(result.output)["rhs"], ["1", "0", "-1"])

    def test_domain_errors_exit_2(self):
        self.assertEqual(self.invoke('verify', 'catalan', '--x', '1', '--y', '1',
                                     '--n', '2', '--r', '3').exit_code, 2)
        self.assertEqual(self.invoke('verify', 'recover-a', '--x', '2', '--y', '3',
                                     '--b', '1,4,11,34', '--c', '1,4,11,34',
                                     '--k', '1', '--m', '2').exit_code, 2)
        self.assertEqual(self.invoke('verify', 'docagne', '--x', '1', '--y', '1', '--b', '1,1,1',
                                     '--c', '0,1', '--k', '1', '--m', '1').exit_code, 2)


class TestWordsAndTilings(CliTestCase):
    """words / tilings 명령"""

    def test_count(self):
        result = self.invoke('words', 'count', '--spec', 'alphabet=3; forbid=01,02', '--n', '3')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output.strip(), "15")

    def test_count_json(self):
        result = self.invoke('--json', 'words', 'count', '--spec', 'alphabet=3;forbid=02,01',
                             '--n', '3')
        self.assertEqual(json.loads(result.output),
                         {"spec": "alphabet=3; forbid=01,02", "n": 3, "count": "15"})

    def test_enumerate(self):
        result = self.invoke('words', 'enumerate', '--spec', 'alphabet=2; forbid=01', '--n', '3')
        self.assertEqual(result.output.split(), ["000", "100", "110", "111"])

    def test_cap_from_environment(self):
        args = ('words', 'enumerate', '--spec', 'alphabet=4', '--n', '3')
        self.assertEqual(self.invoke(*args, env={'RECUR2_CAP': '10'}).exit_code, 2)
        result = self.invoke(*args, env={'RECUR2_CAP': '64'})
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(len(result.output.split()), 64)

    def test_enumerate_long_unary_word(self):
        """σ = 1 의 수천 길이 단어도 종료 코드 0"""
        args = ('words', 'enumerate', '--spec', 'alphabet=1', '--n', '5000')
        result = self.invoke(*args)
        self.assertEqual(result.exit_code, 0, result.output[:200])
        self.assertEqual(result.output.strip(), "0" * 5000)
        self.assertEqual(run(list(args)), 0)

    def test_bad_spec(self):
        for spec in ("alphabet=11", "alphabet=2; forbid=21", "forbid=01", "alphabet=3; forbidden=01"):
            result = self.invoke('words', 'count', '--spec', spec, '--n', '3')
            self.assertEqual(result.exit_code, 2, spec)

    def test_tilings(self):
        result = self.invoke('tilings', '--n', '3', '--colors1', '2', '--colors2', '2')
        self.assertEqual(result.output.strip(), "16")


class TestCatalogCommands(CliTestCase):
    """presets / crosscheck / bindings 명령"""

    def test_presets(self):
        result = self.invoke('--json', 'presets')
        items = json.loads(result.output)
        self.assertEqual(len(items), 12)
        mersenne = next(item for item in items if item["id"] == "mersenne")
        self.assertEqual(mersenne["word_model"], "alphabet=3; forbid=01,02")

    def test_crosscheck(self):
        result = self.invoke('crosscheck', '--preset', 'fibonacci', '--max-n', '8')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertNotIn("❌", result.output)

        result = self.invoke('--json', 'crosscheck', '--all', '--max-n', '6')
        rows = json.loads(result.output)
        self.assertEqual(len(rows), 12 * 7)
        self.assertTrue(all(row["agree"] for row in rows))

    def test_selection_errors(self):
        self.assertEqual(self.invoke('crosscheck').exit_code, 2)
        self.assertEqual(self.invoke('crosscheck', '--preset', 'pell', '--all').exit_code, 2)
        self.assertEqual(self.invoke('crosscheck', '--preset', 'pell', '--max-n', '1').exit_code, 2)
        self.assertEqual(self.invoke('bindings').exit_code, 2)

    def test_bindings(self):
        result = self.invoke('--json', 'bindings', '--preset', 'mersenne', '--max-index', '3')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(json.loads(result.output), {"checked": 64, "failures": []})


class TestFuzz(CliTestCase):
    """fuzz 명령"""

    def test_zero_trials_rejected(self):
        self.assertEqual(self.invoke('fuzz', '--seed', '1', '--trials', '0').exit_code, 2)

    def test_seed_required(self):
        self.assertEqual(self.invoke('fuzz', '--trials', '5').exit_code, 2)

    def test_same_seed_same_output(self):
        first = self.invoke('fuzz', '--seed', '42', '--trials', '90')
        second = self.invoke('fuzz', '--seed', '42', '--trials', '90')
        self.assertEqual(first.exit_code, 0, first.output)
        self.assertEqual(first.output, second.output)
        self.assertIn("실패: 0", first.output)

    def test_json_summary(self):
        result = self.invoke('--json', 'fuzz', '--seed', '3', '--trials', '20',
                             '--identity', 'cassini', '--identity', 'vajda')
        data = json.loads(result.output)
        self.assertEqual(data["covered"], {"cassini": 10, "vajda": 10})
        self.assertEqual(data["failures"], [])


class TestRun(unittest.TestCase):
    """run() 종료 코드"""

    def test_exit_codes(self):
        self.assertEqual(run(['words', 'count', '--spec', 'alphabet=3; forbid=01,02', '--n', '3']), 0)
        self.assertEqual(run(['fuzz', '--seed', '1', '--trials', '0']), 2)
        self.assertEqual(run(['words', 'count', '--spec', 'alphabet=0', '--n', '3']), 2)
        self.assertEqual(run(['verify', 'prop8', '--u', '1,2,3,4', '--v', '5,1,2', '--b', '1,0',
                              '--c', '0,1', '--k', '1', '--n', '1', '--convention', 'one-based']), 1)


if __name__ == '__main__':
    unittest.main()
