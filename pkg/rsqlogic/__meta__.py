"""
```{warning}
Do not manually change this information.
```

Metadata information about rsqlogic. This file is used by rsqlogic and updated by the CI/CD pipeline.
"""

__version__ = "0.3.0"

__author__ = "rsqlogic contributors"

__copyright__ = """
Copyright (c) 2026, rsqlogic contributors
Permission to use, copy, modify, and distribute this software and its
documentation for any purpose and without fee or royalty is hereby
granted, provided that the above copyright notice appear in all copies
and that both that copyright notice and this permission notice appear
in supporting documentation or portions thereof, including
modifications, that you make.
"""
