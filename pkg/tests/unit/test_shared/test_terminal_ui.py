import io

from shared.utils.terminal_ui import Ansi, panel_lines, print_panel


def test_panel_lines_align_labels_and_close_the_box() -> None:
    lines = panel_lines("Verify", [("Suite", "crown"), ("Passed", "5/5")], width=80)
    assert lines[0].startswith("╭─ Verify ")
    assert lines[-1].startswith("╰")
    assert "Suite   crown" in lines[1]
    assert "Passed  5/5" in lines[2]
    assert len({len(line) for line in lines}) == 1


def test_long_values_wrap_under_their_column() -> None:
    lines = panel_lines("Failed", [("Ids", " ".join(f"check/{i}" for i in range(30)))], width=50)
    assert len(lines) > 3
    assert all(line.startswith("│ ") for line in lines[1:-1])
    assert lines[2].startswith("│      ")


def test_print_panel_respects_forced_colour(monkeypatch) -> None:
    stream = io.StringIO()
    monkeypatch.setenv("TREEBOUND_FORCE_COLOR", "false")
    print_panel("Weights", [("Status", "found")], Ansi.GREEN, stream=stream)
    assert "\033[" not in stream.getvalue()

    stream = io.StringIO()
    monkeypatch.setenv("TREEBOUND_FORCE_COLOR", "true")
    print_panel("Weights", [("Status", "found")], Ansi.GREEN, stream=stream)
    assert Ansi.GREEN in stream.getvalue()
