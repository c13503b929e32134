"""
Cross-checks of the exact solver against the standalone scripts.
"""

import pytest
import sys
import os
from fractions import Fraction

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'scripts'))

import check_small_values
import export_corpus

from src.core.corpus import connected_small_graphs
from src.core.domination import Alpha, Mode
from src.core.exact import exact_number
from src.core.generators import gen_complete, gen_cycle
from src.core.graph_io import read_graph_file


SOLVER_GRAPHS = {'C5': gen_cycle(5), 'K4': gen_complete(4)}


def solver_mode(condition):
    name, _, arg = condition.partition('=')
    if name == 'dom':
        return Mode.dom()
    if name == 'tuple':
        return Mode.k_tuple(int(arg))
    fraction = Fraction(arg)
    alpha = Alpha(fraction.numerator, fraction.denominator)
    return Mode.alpha_mode(alpha) if name == 'alpha' else Mode.alpha_rate(alpha)


class TestBruteForceChecker:
    """Tests for the independent subset-enumeration checker."""

    def test_known_values(self):
        for graph_name, condition, expected, found in check_small_values.check_all():
            assert found == expected, (graph_name, condition)

    def test_solver_agrees(self):
        for (graph_name, condition), expected in check_small_values.KNOWN_VALUES.items():
            result = exact_number(SOLVER_GRAPHS[graph_name], solver_mode(condition))
            assert result.value == expected, (graph_name, condition)

    def test_main_exit_code(self, capsys):
        assert check_small_values.main([]) == 0
        assert "MISMATCH" not in capsys.readouterr().out


class TestCorpusExport:
    """Tests for writing the small-graph corpus to disk."""

    def test_export_round_trip(self, tmp_path):
        count = export_corpus.export(str(tmp_path), 4)
        graphs = connected_small_graphs(4)
        assert count == len(graphs) == 10

        files = sorted(os.listdir(tmp_path))
        assert len(files) == count
        for name, graph in zip(files, graphs):
            assert read_graph_file(str(tmp_path / name)) == graph

    def test_bad_order(self, tmp_path):
        assert export_corpus.main(['--out', str(tmp_path), '--max-n', '9']) == 1


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
