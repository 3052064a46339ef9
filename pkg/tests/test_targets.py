from edds.targets import TargetPolicy, get_target_policy


def test_registry_file_policies():
    subdivision = get_target_policy("s")
    assert subdivision.title == "subdivision S(G)"
    assert subdivision.max_n == 5
    assert subdivision.original_bound_check is True

    assert get_target_policy("cycle").max_n == 15
    assert get_target_policy("mu-bar").original_bound_check is False


def test_unknown_target_uses_defaults():
    assert get_target_policy("unknown") == TargetPolicy(title=None, max_n=4, original_bound_check=False)


def test_custom_policy_file(tmp_path):
    policy_file = tmp_path / "targets.yaml"
    policy_file.write_text(
        "defaults:\n"
        "  max_n: 3\n"
        "targets:\n"
        "  s:\n"
        "    max_n: not-a-number\n"
        "    original_bound_check: true\n"
        "  m: just a string\n",
        encoding="utf-8",
    )

    policy = get_target_policy("s", str(policy_file))
    assert policy.max_n == 3
    assert policy.original_bound_check is True
    assert get_target_policy("m", str(policy_file)) == TargetPolicy(max_n=3)


def test_missing_policy_file_falls_back(tmp_path):
    assert get_target_policy("s", str(tmp_path / "absent.yaml")) == TargetPolicy()
