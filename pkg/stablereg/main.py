#!/usr/bin/python3
# coding=utf-8
# pylint: disable=I0011,W0703

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
    Main entry point
"""

import os
import signal
import pkgutil
import argparse
import importlib
from logging import DEBUG, INFO

import stablereg.commands
from stablereg import constants
from stablereg.tools import log
from stablereg.models.error import StableRegError


def make_parser():
    """ Argument parser with all discovered commands, and the command instances """
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "-d", "--debug", dest="log_level",
        help="enable debug output",
        action="store_const", const=DEBUG, default=INFO
    )
    parser = argparse.ArgumentParser(
        prog=constants.TOOL_NAME,
        formatter_class=argparse.ArgumentDefaultsHelpFormatter
    )
    subparsers = parser.add_subparsers(
        dest="command", title="commands",
        help="command to execute, use <command> -h to get command help"
    )
    subparsers.required = True
    # Load commands
    commands = dict()
    for _, name, pkg in pkgutil.iter_modules(stablereg.commands.__path__):
        if pkg:
            continue
        module = importlib.import_module(f"stablereg.commands.{name}")
        argparser = subparsers.add_parser(
            module.Command.get_name(),
            parents=[parent],
            help=module.Command.get_description(),
            formatter_class=argparse.ArgumentDefaultsHelpFormatter
        )
        commands[module.Command.get_name()] = module.Command(argparser)
    return parser, commands


def main(argv=None):
    """ Main, returns process exit code """
    parser, commands = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse usage errors are parse errors
        return constants.EXIT_PARSE_ERROR if exc.code else constants.EXIT_OK
    # Setup logging
    log.init(args.log_level)
    log.info("%s %s is starting", constants.TOOL_NAME, constants.TOOL_VERSION)
    log.debug("Loaded commands: %s", ", ".join(list(commands.keys())))
    # Install interrupt signal handler
    signal.signal(signal.SIGINT, interrupt_handler)
    # Run selected command
    try:
        result = commands[args.command].execute(args)
    except StableRegError as exc:
        log.error("%s: %s", exc.__class__.__name__, exc)
        return exc.exit_code
    except Exception:
        log.exception("Command failed")
        return constants.EXIT_FAILED
    log.info("All done, exit code %d", result)
    return result


def interrupt_handler(signal_, frame):  # pylint: disable=W0613
    """ Handle interrupt signals """
    log.error("Got interrupt signal. Terminating")
    os._exit(constants.EXIT_FAILED)  # pylint: disable=W0212
