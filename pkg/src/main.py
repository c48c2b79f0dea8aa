import logging

from src.cli import cli
from src.config import settings

logging.basicConfig(
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    level=settings.log_level,
)
logger = logging.getLogger(__name__)


def main() -> None:
    cli(prog_name="trustlogic")


if __name__ == "__main__":
    main()
