from stabgraph.diagnostics import DiagnosticCollector, Severity


def test_second_error_on_a_graph_points_at_the_first():
    collector = DiagnosticCollector()
    first = collector.add_error("th2", "alpha+ disagrees", "Cr")
    second = collector.add_error("prop4", "cover disagrees", "Cr")

    assert first.related == ()
    assert len(second.related) == 1
    assert "th2" in second.related[0].message
    assert collector.has_errors()


def test_notes_are_kept_apart_from_errors():
    collector = DiagnosticCollector()
    collector.add_info("alpha2", "degenerate case", "Bo")
    collector.add_info("prop2", "second note", "Bo")

    assert not collector.has_errors()
    assert [d.code for d in collector.notes()] == ["alpha2", "prop2"]
    assert all(d.severity is Severity.INFO for d in collector.notes())


def test_sorted_orders_by_graph_then_code():
    collector = DiagnosticCollector()
    collector.add_error("b", "x", "Cr")
    collector.add_error("a", "x", "Cr")
    collector.add_error("a", "x", "Bo")

    assert [(d.graph6, d.code) for d in collector.sorted()] == [("Bo", "a"), ("Cr", "a"), ("Cr", "b")]


def test_str_includes_related_lines():
    collector = DiagnosticCollector()
    collector.add_error("th2", "first", "Cr")
    text = str(collector.add_error("th3", "second", "Cr"))

    assert text.startswith("[th3] error: second at Cr")
    assert "\n  - Same graph already violates th2. at Cr" in text


def test_clear():
    collector = DiagnosticCollector()
    collector.add_error("th2", "first", "Cr")
    collector.clear()

    assert collector.diagnostics == []
    assert collector.add_error("th2", "again", "Cr").related == ()
