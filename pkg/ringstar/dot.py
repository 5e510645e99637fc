#!/usr/bin/env python3
#
# Copyright (c) 2024 The ringstar authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing,
# software distributed under the License is distributed on an
# "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
# KIND, either express or implied. See the License for the
# specific language governing permissions and limitations
# under the License.

"""DOT rendering of finite posets."""


def _quote(label):
    return '"%s"' % str(label).replace('"', '\\"')


def dot_graph(name, nodes, edges):
    """Return a DOT digraph with the given nodes and (src, dst) edges."""

    lines = ["digraph %s {" % name,
             "  rankdir=TB;",
             "  node [shape=box, style=rounded];"]

    for node in nodes:
        lines.append("  %s;" % _quote(node))

    for src, dst in edges:
        lines.append("  %s -> %s;" % (_quote(src), _quote(dst)))

    lines.append("}")

    return "\n".join(lines) + "\n"
