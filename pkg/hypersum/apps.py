"""Apps of hypersum."""

from django.apps import AppConfig

from hypersum.settings import check_settings


class HypersumConfig(AppConfig):
    """Configuration of hypersum app."""

    name = 'hypersum'

    def ready(self):
        """Run start-up actions."""
        check_settings()
