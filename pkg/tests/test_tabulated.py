import json

import pytest

from core.errors import InvalidParameter, MalformedEntry, MissingEntry
from core.semigroup import F3, Elem, window
from endo.generators import Alpha, Flip
from endo.normal_form import NormalForm, nf_apply
from oracle.tabulated import dump_table, load_table, save_table, tabulate, tabulate_map


def test_tabulate_normal_form():
    f = NormalForm(2, 1, 1)
    T = tabulate(f, 3)
    assert T.domain_bound == 3
    assert len(T) == len(window(3, F3)) == 48
    assert T.name == "a2.l1.w1"
    assert all(T[x] == nf_apply(f, x) for x in T.keys())


def test_tabulate_endo_object():
    T = tabulate(Flip(3).then(Alpha(2)), 2)
    assert T.name == "w∘a2"
    assert T[Elem(0, 0, 0)] == Alpha(2)(Elem(0, 0, 2))


def test_tabulate_rejects_negative_bound():
    with pytest.raises(InvalidParameter):
        tabulate_map(lambda x: x, -1)


def test_image_outside_f3():
    with pytest.raises(MalformedEntry):
        tabulate_map(lambda x: Elem(x.i, x.j, 3), 1)


def test_file_round_trip(tmp_path):
    T = tabulate(NormalForm(3, 2, 0), 2)
    path = tmp_path / "a3.json"
    save_table(T, path)
    loaded = load_table(path)
    assert loaded.domain_bound == 2
    assert loaded.table == T.table
    assert loaded.name == "a3"


def test_complete_file_for_n2(table_file):
    T = load_table(table_file(tabulate(NormalForm(1, 0, 0), 2)))
    assert len(T) == 27


def test_missing_entry(table_file):
    data = dump_table(tabulate(NormalForm(1, 0, 0), 2))
    data["entries"] = [e for e in data["entries"] if e["x"] != {"i": 2, "j": 2, "p": 1}]
    with pytest.raises(MissingEntry) as info:
        load_table(table_file(data))
    assert info.value.missing == ["(2,2,1)"]


def test_missing_entries_of_huge_window(table_file):
    with pytest.raises(MissingEntry) as info:
        load_table(table_file({"N": 100_000_000, "entries": []}))
    assert info.value.missing == [f"{3 * 100_000_001 ** 2} of {3 * 100_000_001 ** 2} entries of Window(100000000)"]


def test_not_utf8(tmp_path):
    path = tmp_path / "bad.json"
    path.write_bytes(b'\xff\xfe{"N":')
    with pytest.raises(MalformedEntry) as info:
        load_table(path)
    assert info.value.position == "byte 0"


def test_image_ray_outside_family(table_file):
    data = dump_table(tabulate(NormalForm(1, 0, 0), 2))
    data["entries"][5]["fx"]["p"] = 7
    with pytest.raises(MalformedEntry) as info:
        load_table(table_file(data))
    assert info.value.position == "entries[5]"


@pytest.mark.parametrize("mutate, position", [
    (lambda d: d["entries"].append(dict(d["entries"][0])), "entries[27]"),
    (lambda d: d["entries"][0].update(x={"i": 9, "j": 0, "p": 0}), "entries[0]"),
    (lambda d: d["entries"][3].pop("fx"), "entries[3]"),
    (lambda d: d["entries"][1]["x"].update(p=-1), "entries[1]"),
    (lambda d: d.update(N="2"), "N"),
    (lambda d: d.pop("entries"), "top level"),
])
def test_malformed_structure(table_file, mutate, position):
    data = dump_table(tabulate(NormalForm(1, 0, 0), 2))
    mutate(data)
    with pytest.raises(MalformedEntry) as info:
        load_table(table_file(data))
    assert info.value.position == position


def test_invalid_json_reports_line(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"N": 2,\n "entries": [\n', encoding="utf-8")
    with pytest.raises(MalformedEntry) as info:
        load_table(path)
    assert info.value.position.startswith("line ")


def test_dump_is_sorted_json():
    data = dump_table(tabulate(NormalForm(1, 1, 0), 1))
    keys = [(e["x"]["i"], e["x"]["j"], e["x"]["p"]) for e in data["entries"]]
    assert keys == sorted(keys)
    json.dumps(data)
