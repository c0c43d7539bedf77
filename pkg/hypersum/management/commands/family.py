"""Verify the specializations a = -j/q - m of the closed evaluation."""
from typing import Any

from django.core.management.base import CommandParser

from hypersum.constants import IdentityId
from hypersum.identities.runner import VerifyConfig, verify_all
from hypersum.management.base import HypersumCommand


class Command(HypersumCommand):
    """Verify the specializations a = -j/q - m of the closed evaluation."""

    help = 'Verify 2F1(a, qa+1; qa; q/(q-1)) = (a+1)_k/k! (q/(q-1))^k for a = -j/q - m and k = j + qm.'

    def add_arguments(self, parser: CommandParser) -> None:
        """Add arguments."""
        parser.add_argument('--q', type=int, help='A single q >= 2 (default 2, ..., HYPERSUM_FAMILY_Q_MAX).')
        parser.add_argument('--j', type=int, help='A single j, 1 <= j <= q (default all).')
        parser.add_argument('--m-max', type=int, dest='m_max', help='Largest m (default HYPERSUM_FAMILY_M_MAX).')
        self.add_output_arguments(parser)

    def run(self, **options: Any) -> None:
        """Run the command."""
        config = VerifyConfig.from_settings(identities=[IdentityId.FAMILY], q=options.get('q'), j=options.get('j'),
                                            family_m_max=options.get('m_max'))
        self.write_reports(verify_all(config), self.is_structured(options))
