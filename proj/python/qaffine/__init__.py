# Copyright 2026 The qaffine Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Graded automorphism groups of quantum affine spaces.

Index lists are 0-based. Permutations and groups are written as 1-based
cycle strings such as "(1 2)(3 4)" or "(1 2 3), (1 2)".
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
