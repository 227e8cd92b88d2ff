"""Best-effort downloads of the public source datasets.

Both datasets sit behind university servers whose URLs shift over time;
the tables below hold the most recent known locations.  Conversion and
evaluation never require network access — point ``convert`` at a manually
downloaded archive when fetching is not possible.
"""

from __future__ import annotations

import logging
import urllib.request
from pathlib import Path

logger = logging.getLogger(__name__)

DATASET_URLS = {
    "pu": [
        # Paderborn KAt bearing archive, one file per bearing code
        "https://groups.uni-paderborn.de/kat/BearingDataCenter/K001.rar",
        "https://groups.uni-paderborn.de/kat/BearingDataCenter/KA01.rar",
        "https://groups.uni-paderborn.de/kat/BearingDataCenter/KI01.rar",
        "https://groups.uni-paderborn.de/kat/BearingDataCenter/KB23.rar",
    ],
    "bonn": [
        # University of Bonn epilepsy sets Z, O, N, F, S
        "https://www.ukbonn.de/site/assets/files/21874/z.zip",
        "https://www.ukbonn.de/site/assets/files/21874/o.zip",
        "https://www.ukbonn.de/site/assets/files/21874/n.zip",
        "https://www.ukbonn.de/site/assets/files/21874/f.zip",
        "https://www.ukbonn.de/site/assets/files/21874/s.zip",
    ],
}


def fetch(dataset: str, dest) -> list[Path]:
    """Download every archive of ``dataset`` into ``dest``; returns paths.

    Raises KeyError for unknown dataset names; network errors propagate so
    callers can fall back to manual download.
    """
    if dataset not in DATASET_URLS:
        raise KeyError(
            f"unknown dataset {dataset!r}; expected one of {sorted(DATASET_URLS)}"
        )
    dest = Path(dest)
    dest.mkdir(parents=True, exist_ok=True)
    paths = []
    for url in DATASET_URLS[dataset]:
        target = dest / url.rsplit("/", 1)[-1]
        logger.info("fetching %s -> %s", url, target)
        with urllib.request.urlopen(url) as response, open(target, "wb") as fh:
            fh.write(response.read())
        paths.append(target)
    return paths
