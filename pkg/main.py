import logging
import sys

from config import config
from cli.commands import run


def main() -> int:
    logging.basicConfig(
        level=config.LOG_LEVEL,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[logging.StreamHandler(sys.stderr)]
    )
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
