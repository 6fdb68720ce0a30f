import io
import logging
import unittest

from bergman_spaces.utils.logger import PACKAGE_LOGGER, configure_logging, verbosity_level


class TestLogger(unittest.TestCase):
    """Test the command-line logging setup"""

    def tearDown(self):
        logger = logging.getLogger(PACKAGE_LOGGER)
        for handler in list(logger.handlers):
            if getattr(handler, "_bergman_cli", False):
                logger.removeHandler(handler)
        logger.setLevel(logging.NOTSET)

    def test_levels(self):
        """-v gives INFO and -vv DEBUG"""
        self.assertEqual(verbosity_level(0), logging.WARNING)
        self.assertEqual(verbosity_level(1), logging.INFO)
        self.assertEqual(verbosity_level(3), logging.DEBUG)

    def test_records_reach_stream(self):
        """Package records are formatted onto the stream"""
        stream = io.StringIO()
        configure_logging(1, stream)
        logging.getLogger(PACKAGE_LOGGER + ".quadrature.rules").info("nodes ready")
        logging.getLogger(PACKAGE_LOGGER + ".quadrature.rules").debug("hidden")
        output = stream.getvalue()
        self.assertIn("INFO bergman_spaces.quadrature.rules: nodes ready", output)
        self.assertNotIn("hidden", output)

    def test_reconfigure_replaces_handler(self):
        """A second call does not stack handlers"""
        configure_logging(0, io.StringIO())
        configure_logging(2, io.StringIO())
        logger = logging.getLogger(PACKAGE_LOGGER)
        installed = [h for h in logger.handlers if getattr(h, "_bergman_cli", False)]
        self.assertEqual(len(installed), 1)
        self.assertEqual(logger.level, logging.DEBUG)


if __name__ == '__main__':
    unittest.main()
