import copy
import json

import pytest

from beamkit import ValidationError
from beamkit.config import (
    config_digest,
    config_from_dict,
    config_to_dict,
    load_config,
)
from conftest import small_config_dict


class TestRoundTrip:
    def test_parse_serialize_parse_is_identity(self):
        first = config_from_dict(small_config_dict("out"))
        second = config_from_dict(config_to_dict(first))
        assert first == second

    def test_serialized_form_is_json_stable(self):
        config = config_from_dict(small_config_dict("out"))
        a = json.dumps(config_to_dict(config), sort_keys=True)
        b = json.dumps(config_to_dict(config), sort_keys=True)
        assert a == b

    def test_optional_sections_may_be_absent(self):
        d = small_config_dict("out")
        del d["cell"], d["montecarlo"], d["ucca_sweep"]
        config = config_from_dict(d)
        assert config.cell is None
        assert config.montecarlo is None
        assert config.ucca_sweep is None
        assert config_from_dict(config_to_dict(config)) == config


class TestValidation:
    def test_missing_schema(self):
        d = small_config_dict("out")
        del d["schema"]
        with pytest.raises(ValidationError):
            config_from_dict(d)

    def test_wrong_schema_version(self):
        d = small_config_dict("out")
        d["schema"] = 99
        with pytest.raises(ValidationError):
            config_from_dict(d)

    def test_unknown_top_level_key(self):
        d = small_config_dict("out")
        d["frequencyhz"] = 1.0
        with pytest.raises(ValidationError):
            config_from_dict(d)

    def test_empty_arrays_rejected(self):
        d = small_config_dict("out")
        d["arrays"] = []
        with pytest.raises(ValidationError):
            config_from_dict(d)

    def test_duplicate_array_names_rejected(self):
        d = small_config_dict("out")
        d["arrays"][1]["name"] = d["arrays"][0]["name"]
        with pytest.raises(ValidationError):
            config_from_dict(d)

    def test_module_preconditions_surface_at_parse(self):
        d = small_config_dict("out")
        d["arrays"][1]["rings"] = 0
        with pytest.raises(ValidationError):
            config_from_dict(d)

    def test_bad_kind_rejected(self):
        d = small_config_dict("out")
        d["arrays"][0]["kind"] = "hexagonal"
        with pytest.raises(ValidationError):
            config_from_dict(d)

    def test_unknown_array_key_rejected(self):
        d = small_config_dict("out")
        d["arrays"][0]["spacing_wl"] = 1.0  # rpa entry cannot carry a ring field
        with pytest.raises(ValidationError):
            config_from_dict(d)

    def test_montecarlo_plane_validation(self):
        d = small_config_dict("out")
        d["montecarlo"]["planes"] = ["elevation", "elevation"]
        with pytest.raises(ValidationError):
            config_from_dict(d)
        d["montecarlo"]["planes"] = ["diagonal"]
        with pytest.raises(ValidationError):
            config_from_dict(d)

    def test_non_integer_counts_rejected(self):
        d = small_config_dict("out")
        d["montecarlo"]["trials"] = 10.5
        with pytest.raises(ValidationError):
            config_from_dict(d)


class TestDigest:
    def test_identical_configs_share_digest(self):
        a = config_from_dict(small_config_dict("out"))
        b = config_from_dict(small_config_dict("out"))
        assert config_digest(a) == config_digest(b)

    def test_any_field_change_moves_digest(self):
        base = config_from_dict(small_config_dict("out"))
        seen = {config_digest(base)}
        for mutate in (
            lambda d: d.update(frequency_hz=27e9),
            lambda d: d.update(cut_step_deg=0.02),
            lambda d: d["steering"].update(theta_deg=31.0),
            lambda d: d["montecarlo"].update(seed=8),
            lambda d: d["arrays"][0].update(nx=5),
            lambda d: d["cell"].update(height_m=12.0),
        ):
            d = copy.deepcopy(small_config_dict("out"))
            mutate(d)
            digest = config_digest(config_from_dict(d))
            assert digest not in seen
            seen.add(digest)


class TestLoadConfig:
    def test_loads_from_file(self, tmp_path):
        path = tmp_path / "scenario.json"
        path.write_text(json.dumps(small_config_dict(str(tmp_path / "out"))))
        config = load_config(path)
        assert len(config.arrays) == 2

    def test_missing_file(self, tmp_path):
        with pytest.raises(ValidationError):
            load_config(tmp_path / "absent.json")

    def test_malformed_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(ValidationError):
            load_config(path)
