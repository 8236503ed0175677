import orbitsum


def test_root_system_counts():
    assert orbitsum.phi_size([2, 2]) == 4
    assert orbitsum.phi_size([1, 1, 1]) == 0
    assert orbitsum.n_psi_size([2, 2]) == 8
    assert orbitsum.corank([2, 1, 1]) == 2
    assert orbitsum.partitions(4) == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert orbitsum.proper_shapes(4) == [[3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert orbitsum.corank_one_shapes(5) == [[4, 1], [3, 2]]


def test_crossing_numbers():
    res = orbitsum.max_crossing([2, 2], [2, 2])
    assert res["value"] == 4
    assert res["value"] == orbitsum.brute_force_max_crossing([2, 2], [2, 2])
    assert orbitsum.min_crossing([2, 2], [2, 2]) == 0
    bound = orbitsum.crossing_bound([2, 2], [2, 2])
    assert bound["numerator"] == 4 and bound["denominator"] == 1
    assert bound["equality_possible"] is True


def test_classify_open():
    verdict = orbitsum.classify([[2, 2], [2, 1, 1]])
    assert verdict["classification"] == "Open"
    assert verdict["measure_class"] == "InL2"
    assert all(row["lhs"] <= row["rhs"] for row in verdict["margins"])


def test_classify_exceptional_pair():
    verdict = orbitsum.classify([[2, 2], [2, 2]])
    assert verdict["classification"] == "Singular"
    assert verdict["measure_class"] == "SingularToHaar"
    assert verdict["theorem1"]["exception"] is True
    assert verdict["witness"]["family"] == "parity"
    assert orbitsum.verify_witness(verdict["witness"]) is True


def test_witness_absent_for_open_tuple():
    assert orbitsum.singular_witness([[2, 2], [2, 1, 1]]) is None
    witness = orbitsum.singular_witness([[2, 1], [2, 1]])
    assert witness["family"] == "linear"
    assert orbitsum.verify_witness(witness) is True


def test_numeric_oracle():
    singular = orbitsum.numeric_classify([[2, 2], [2, 2]], samples=8, seed=7)
    assert singular["outcome"] == "SingularEvidence"
    open_verdict = orbitsum.numeric_classify([[1, 1], [1, 1]], samples=8, seed=7)
    assert open_verdict["outcome"] == "OpenCertificate"
    again = orbitsum.numeric_classify([[1, 1], [1, 1]], samples=8, seed=7)
    assert open_verdict == again
    assert orbitsum.centralizer_dim([2, 2]) == 7
    assert orbitsum.centralizer_dim([2, 1], case="group") == 4


def test_scan_agreement():
    rows = orbitsum.scan(4, 4, 2, 2)
    assert len(rows) == 15
    assert all(row["agree"] for row in rows)


def test_haar_sample_determinism():
    a = orbitsum.haar_sample(3, seed=42)
    b = orbitsum.haar_sample(3, seed=42)
    assert a == b
