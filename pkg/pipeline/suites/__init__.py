"""
Verification suites, one command per area
"""

from typing import Dict, Type

from pipeline.commands import SuiteCommand
from .algebra import AlgebraSuiteCommand
from .series import SeriesSuiteCommand
from .schwarz import SchwarzSuiteCommand
from .quaternion import QuaternionSuiteCommand
from .diameters import DiametersSuiteCommand
from .zeros import ZerosSuiteCommand
from .growth import GrowthSuiteCommand

# Canonical order, matches utils.constants.SUITE_NAMES
SUITES: Dict[str, Type[SuiteCommand]] = {
    command.name: command
    for command in (
        AlgebraSuiteCommand,
        SeriesSuiteCommand,
        SchwarzSuiteCommand,
        QuaternionSuiteCommand,
        DiametersSuiteCommand,
        ZerosSuiteCommand,
        GrowthSuiteCommand,
    )
}

__all__ = [
    'SUITES',
    'AlgebraSuiteCommand',
    'SeriesSuiteCommand',
    'SchwarzSuiteCommand',
    'QuaternionSuiteCommand',
    'DiametersSuiteCommand',
    'ZerosSuiteCommand',
    'GrowthSuiteCommand'
]
