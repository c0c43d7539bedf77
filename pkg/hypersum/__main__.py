"""Console script of hypersum."""
import os
import sys
from typing import List, Optional

from django.core.management import execute_from_command_line


def main(argv: Optional[List[str]] = None) -> None:
    """Run a hypersum command, e.g. ``hypersum verify case1``."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'hypersum.cli_settings')
    if argv is None:
        argv = sys.argv
    execute_from_command_line(['hypersum'] + list(argv[1:]))


if __name__ == '__main__':
    main()
