import io
import json
import unittest
import warnings

from memocr.eval.suite import EvalSuite
from memocr.parsers import JsonParser
from memocr.utils.warnings import InstanceWarning


class TestJsonParser(unittest.TestCase):

    def setUp(self):
        warnings.simplefilter("error")
        self.record = {"id": "a", "question": "q", "gold_answers": ["x"], "context": "x y"}

    def tearDown(self):
        warnings.simplefilter(warnings.defaultaction)

    def load(self, document):
        return EvalSuite(io.BytesIO(json.dumps(document).encode("utf-8")))

    def test_can_parse(self):
        self.assertTrue(JsonParser.can_parse("suite.txt", b"  [ {}"))
        self.assertTrue(JsonParser.can_parse("suite.json", b'{"instances": []}'))
        self.assertFalse(JsonParser.can_parse("suite.txt", b'{"instances": []}'))

    def test_array(self):
        suite = self.load([self.record])
        self.assertEqual(suite[0].context, "x y")

    def test_empty_array(self):
        self.assertEqual(len(self.load([])), 0)

    def test_wrapped_document(self):
        with NamedBytesIO(json.dumps({"schema_version": 1, "instances": [self.record]})) as handle:
            suite = EvalSuite(handle)
        self.assertEqual(len(suite), 1)

    def test_unsupported_document_version(self):
        document = json.dumps({"schema_version": 3, "instances": [self.record]})
        with NamedBytesIO(document) as handle:
            self.assertRaises(ValueError, EvalSuite, handle)

    def test_skipped_record(self):
        with self.assertWarns(InstanceWarning) as ctx:
            suite = self.load([self.record, {"id": "b"}])
        self.assertIn("index 1", str(ctx.warning))
        self.assertEqual(suite.skipped, 1)


class NamedBytesIO(io.BytesIO):
    """An in-memory binary file with a ``.json`` name."""

    name = "suite.json"

    def __init__(self, text):
        super().__init__(text.encode("utf-8"))
