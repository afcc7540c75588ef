import json

from critpairs.beyond import beyond_classify
from critpairs.certificates import certificate_to_dict, certificate_to_json
from critpairs.groups import make_group
from critpairs.kst import critical_classify, kst_classify

Z6, Z7 = make_group([6]), make_group([7])


def test_kst_json_golden():
    c = kst_classify(Z6.subset([0, 3, 1]), Z6.subset([0, 3]))
    assert certificate_to_json(c) == (
        '{"group":"z6","type":"I","quasi_period":[0,3],"A1":[0,3],"A0":[1],"B1":[],"B0":[0,3],'
        '"witnesses":{},"recursion":{"group":"z3","type":"I","quasi_period":[0,1,2],'
        '"A1":[],"A0":[0,1],"B1":[],"B0":[0],"witnesses":{},"recursion":null}}'
    )


def test_key_order():
    c = kst_classify(Z7.subset([0, 1, 3]), Z7.subset([1, 2, 3, 5]))
    keys = list(certificate_to_dict(c))
    assert keys == ["group", "type", "quasi_period", "A1", "A0", "B1", "B0", "witnesses", "recursion"]


def test_other_kinds_serialise():
    for cert in (
        beyond_classify(Z7.subset([0, 1, 3]), Z7.subset([0, 1, 3])),
        critical_classify(Z6.subset([0, 1, 3, 4]), Z6.subset([0, 3])),
        beyond_classify(make_group([16]).subset([0, 1, 8, 9]), make_group([16]).subset([0, 3, 8, 11])),
    ):
        d = json.loads(certificate_to_json(cert))
        assert d["type"] in ("Extendible16", "PeriodicReduction", "PeriodicBranch")
        assert certificate_to_json(cert) == certificate_to_json(cert)
