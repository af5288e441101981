"""Documentation package marker."""

from typing import TYPE_CHECKING
