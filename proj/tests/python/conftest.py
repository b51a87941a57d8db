# Copyright 2026 The qgo Authors
#
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

import os
import sys

# The build tree puts the extension under $QGO_PYTHON_DIR/qgo/; an installed
# package needs no path help.
_python_dir = os.environ.get("QGO_PYTHON_DIR")
if _python_dir and _python_dir not in sys.path:
    sys.path.insert(0, _python_dir)
