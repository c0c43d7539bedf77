"""Pytest wiring: configure Django as the project's `django test` runner does (see tox.ini)."""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'hypersum.tests.settings')
django.setup()
