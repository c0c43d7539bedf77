"""Verify identities over parameter grids."""
from typing import Any, List

from django.core.management.base import CommandParser

from hypersum.constants import IdentityId
from hypersum.identities.runner import VerifyConfig, verify_all
from hypersum.management.base import HypersumCommand, rational_argument
from hypersum.settings import SETTINGS

ALL = 'all'


class Command(HypersumCommand):
    """Verify identities over parameter grids."""

    help = 'Verify an identity, or every identity in HYPERSUM_IDENTITIES with "all", and print one report per instance.'

    def add_arguments(self, parser: CommandParser) -> None:
        """Add arguments."""
        parser.add_argument('identity', choices=[i.value for i in IdentityId] + [ALL],
                            help='Identity to verify.')
        parser.add_argument('--alpha', type=rational_argument, help='Verify a single alpha.')
        parser.add_argument('--k', type=int, help='Verify a single k.')
        parser.add_argument('--m-max', type=int, dest='m_max', help='Largest m of the tabulated cases.')
        parser.add_argument('--q', type=int, help='Verify a single q of the family.')
        parser.add_argument('--j', type=int, help='Verify a single j of the family.')
        parser.add_argument('--seed', type=int, help='Seed of random draws (default HYPERSUM_SEED).')
        parser.add_argument('--workers', type=int, help='Number of worker threads (default HYPERSUM_WORKERS).')
        self.add_order_argument(parser)
        self.add_eps_argument(parser)
        self.add_output_arguments(parser)

    def _identities(self, name: str) -> List[IdentityId]:
        if name == ALL:
            return [IdentityId(i) for i in SETTINGS.identities]
        return [IdentityId(name)]

    def run(self, **options: Any) -> None:
        """Run the command."""
        m_max = options.get('m_max')
        config = VerifyConfig.from_settings(
            identities=self._identities(options['identity']),
            order=options.get('order'), eps=options.get('eps'), seed=options.get('seed'),
            workers=options.get('workers'), alpha=options.get('alpha'), k=options.get('k'),
            q=options.get('q'), j=options.get('j'),
            m_max=m_max, family_m_max=m_max, lmm3_m_max=m_max)
        self.write_reports(verify_all(config), self.is_structured(options))
