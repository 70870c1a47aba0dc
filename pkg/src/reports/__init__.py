"""
Report tables and file formats shared by the command line
"""

from .tables import (SPECTRUM_COLUMNS, certificate_frame, iet_frame, read_spectrum, read_table, rounds_frame,
                     spectrum_frame, spectrum_from_frame, write_json, write_spectrum, write_table)

__all__ = [
    'SPECTRUM_COLUMNS', 'certificate_frame', 'iet_frame', 'read_spectrum', 'read_table', 'rounds_frame',
    'spectrum_frame', 'spectrum_from_frame', 'write_json', 'write_spectrum', 'write_table',
]
