import json
import tempfile
import unittest
from pathlib import Path

from bergman_spaces.cli.golden import GOLDEN_VERSION, GoldenStore, check_golden, widened


class TestGolden(unittest.TestCase):
    """Test recording and verifying goldens"""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.store = GoldenStore(Path(self.tmp.name))

    def tearDown(self):
        self.tmp.cleanup()

    def test_no_mode(self):
        """Without a mode nothing is read or written"""
        self.assertEqual(check_golden(self.store, "x", None, "abc", {}, True), 0)
        self.assertFalse(self.store.path("x").exists())

    def test_record_then_verify(self):
        """A recorded run verifies against itself"""
        envelopes = {"k": (0.5, 2.0)}
        self.assertEqual(check_golden(self.store, "x", "record", "abc", envelopes, True), 0)
        self.assertEqual(self.store.path("x").parent.name, GOLDEN_VERSION)
        payload = json.loads(self.store.path("x").read_text(encoding="utf-8"))
        self.assertEqual(payload["envelopes"], {"k": [0.5, 2.0]})
        self.assertEqual(check_golden(self.store, "x", "verify", "abc", envelopes, True), 0)

    def test_digest_mismatch(self):
        """Deterministic runs must reproduce the digest"""
        check_golden(self.store, "x", "record", "abc", {}, True)
        with self.assertLogs("bergman_spaces.cli.golden", level="ERROR"):
            self.assertEqual(check_golden(self.store, "x", "verify", "abd", {}, True), 1)

    def test_envelope_slack(self):
        """Sampled runs may move within 5% of the recorded envelope"""
        check_golden(self.store, "x", "record", "abc", {"k": (1.0, 2.0)}, False)
        self.assertEqual(check_golden(self.store, "x", "verify", "other", {"k": (0.96, 2.08)}, False), 0)
        self.assertEqual(check_golden(self.store, "x", "verify", "other", {"k": (1.0, 2.2)}, False), 1)

    def test_missing(self):
        """Verifying without a golden fails"""
        self.assertEqual(check_golden(self.store, "nothing", "verify", "abc", {}, True), 1)

    def test_widened(self):
        """New keys and wider bounds are reported"""
        recorded = {"a": (1.0, 2.0)}
        self.assertEqual(widened(recorded, {"a": (1.0, 2.0)}), [])
        self.assertEqual(len(widened(recorded, {"a": (0.5, 2.0), "b": (0.0, 1.0)})), 2)


if __name__ == '__main__':
    unittest.main()
