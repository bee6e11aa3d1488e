import sys

from pickem.main.cli import parse_args, run_cli
from pickem.main.init_log import init_log
from pickem.settings import load_settings
from pickem.utils.excepthook import excepthook
from pickem.utils.log import log_environment


def main():
    args = parse_args()

    load_settings(args.config)

    init_log(verbose=args.verbose)

    sys.excepthook = excepthook

    log_environment()

    ret = run_cli(args)

    sys.exit(ret)


if __name__ == "__main__":
    main()
