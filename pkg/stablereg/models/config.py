#!/usr/bin/python3
# coding=utf-8
# pylint: disable=I0011,R0903,E0401

#   Copyright 2024 stablereg authors
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.

"""
    Config helper
"""

import os
import re
import yaml

from ruamel.yaml.comments import CommentedMap

from stablereg.tools import log
from stablereg.tools.dict import recursive_merge
from stablereg.models.error import ParseError
from stablereg import constants


class ConfigModel:
    """ Parses config """

    def __init__(self, context):
        """ Initialize config instance """
        super().__init__()
        self.context = context

    def load(self, config_variable=None, config_file=None):
        """ Load, validate and store settings in context """
        config = self._load_config(config_variable, config_file)
        if config is None:
            config = {constants.CONFIG_VERSION_KEY: constants.CURRENT_CONFIG_VERSION}
        self._validate_config_base(config)
        settings = recursive_merge(constants.DEFAULT_SETTINGS, config.get("settings") or dict())
        self.validate_settings(settings)
        self.context.config = config
        self.context.settings = settings
        log.debug("Resulting settings: %s", settings)
        return settings

    def _load_config(self, config_variable, config_file):
        config_data = None
        if config_variable:
            config_data = os.environ.get(config_variable, None)
            if config_data:
                log.info("Loading config from %s", config_variable)
        if not config_data and config_file and os.path.exists(config_file):
            log.info("Loading config from %s", config_file)
            with open(config_file, "rb") as file_:
                config_data = file_.read().decode("utf-8")
        if not config_data:
            log.debug("No config found, using defaults")
            return None
        try:
            config = yaml.load(os.path.expandvars(config_data), Loader=yaml.SafeLoader)
        except yaml.YAMLError as exc:
            raise ParseError(f"Invalid YAML config: {exc}") from exc
        if not isinstance(config, dict):
            raise ParseError("Config must be a YAML mapping")
        return self._variable_substitution(config)

    def _variable_substitution(self, obj):
        """ Allows to use raw environmental variables inside YAML config """
        if isinstance(obj, dict):
            for key in list(obj.keys()):
                obj[self._variable_substitution(key)] = \
                    self._variable_substitution(obj.pop(key))
        if isinstance(obj, list):
            for index, item in enumerate(obj):
                obj[index] = self._variable_substitution(item)
        if isinstance(obj, str):
            if re.match(r"^\$\![a-zA-Z_][a-zA-Z0-9_]*$", obj.strip()) \
                    and obj.strip()[2:] in os.environ:
                return yaml.load(os.environ[obj.strip()[2:]], Loader=yaml.SafeLoader)
        return obj

    @staticmethod
    def _validate_config_base(config):
        if config.get(constants.CONFIG_VERSION_KEY, 0) != constants.CURRENT_CONFIG_VERSION:
            raise ParseError("Invalid config version")
        settings = config.get("settings")
        if settings is not None and not isinstance(settings, dict):
            raise ParseError("Config settings must be a mapping")

    @staticmethod
    def validate_settings(settings):
        """ Check setting types and ranges """
        unknown = [key for key in settings if key not in constants.DEFAULT_SETTINGS]
        if unknown:
            log.warning("Ignoring unknown settings: %s", ", ".join(sorted(unknown)))
        positive = ["threads", "rank_memo_limit", "sqrt_precision", "max_violations", "max_k"]
        for key in positive:
            value = settings[key]
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ParseError(f"Setting {key} must be a positive integer")
        for key in ["delta_budget", "delta_seed"]:
            value = settings[key]
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ParseError(f"Setting {key} must be a nonnegative integer")
        if settings["max_iterations"] is not None and \
                (not isinstance(settings["max_iterations"], int) or settings["max_iterations"] < 0):
            raise ParseError("Setting max_iterations must be null or a nonnegative integer")
        if settings["eps_policy"] not in constants.EPS_POLICIES:
            raise ParseError(f"Setting eps_policy must be one of: {', '.join(constants.EPS_POLICIES)}")
        if settings["delta_mode"] not in constants.DELTA_MODES:
            raise ParseError(f"Setting delta_mode must be one of: {', '.join(constants.DELTA_MODES)}")
        if not isinstance(settings["peel_singletons"], bool):
            raise ParseError("Setting peel_singletons must be a boolean")

    @staticmethod
    def fill_config(data_obj):
        """ Make sample config """
        data_obj.insert(
            len(data_obj), constants.CONFIG_VERSION_KEY, constants.CURRENT_CONFIG_VERSION
        )
        data_obj.insert(len(data_obj), "settings", CommentedMap(), comment="General settings")
        settings_obj = data_obj["settings"]
        settings_obj.insert(
            len(settings_obj), "max_iterations", None,
            comment="(optional) Refinement round cap, null for n_left + n_right"
        )
        settings_obj.insert(
            len(settings_obj), "eps_policy", constants.EPS_POLICY_STRICT,
            comment="strict (epsilon <= 29/100) or permissive (epsilon < 1/2)"
        )
        settings_obj.insert(
            len(settings_obj), "peel_singletons", False,
            comment="Split off vertices whose own weight exceeds epsilon"
        )
        settings_obj.insert(
            len(settings_obj), "threads", 1,
            comment=f"Worker threads for pair classification (env {constants.THREADS_ENV_KEY} wins)"
        )
        settings_obj.insert(
            len(settings_obj), "rank_memo_limit", constants.DEFAULT_SETTINGS["rank_memo_limit"],
            comment="Maximum splitting rank memo entries"
        )
        settings_obj.insert(
            len(settings_obj), "sqrt_precision", constants.DEFAULT_SETTINGS["sqrt_precision"],
            comment="Denominator of the rational upper bound used for delta = sqrt(2 epsilon)"
        )
        settings_obj.insert(
            len(settings_obj), "delta_mode", constants.DELTA_MODE_AUTO,
            comment="auto, exhaustive (parts <= 12 vertices) or sampled"
        )
        settings_obj.insert(
            len(settings_obj), "delta_budget", constants.DEFAULT_SETTINGS["delta_budget"],
            comment="Subset pairs drawn in sampled mode"
        )
        settings_obj.insert(
            len(settings_obj), "delta_seed", 0, comment="Seed for sampled mode"
        )
        settings_obj.insert(
            len(settings_obj), "max_violations", constants.DEFAULT_SETTINGS["max_violations"],
            comment="Violations listed in reports (all are counted)"
        )
        settings_obj.insert(
            len(settings_obj), "max_k", constants.DEFAULT_SETTINGS["max_k"],
            comment="Default ladder search cap"
        )
