import logging
import sys
import traceback


def excepthook(exc_type, exc_value, exc_tb):
    if exc_type is KeyboardInterrupt:
        logging.info("KeyboardInterrupt")
        sys.exit(1)

    exception_txt = "".join(traceback.format_exception(exc_type, exc_value, exc_tb))

    logging.getLogger("UNHANDLED").critical(exception_txt)

    sys.exit(1)
