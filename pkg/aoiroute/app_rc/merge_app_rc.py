import contextlib
from pathlib import Path

from aoiroute.app_rc.app_rc_error import (
    AppRCSearchError,
    EmptyAppRCError,
    UnsupportedAppRCKeyError,
)
from aoiroute.app_rc.AppRC import AppRC
from aoiroute.boot.BootMode import BootMode
from aoiroute.file.yml import load_yml

# Later modes update sections of earlier ones
APP_RC_MODE_NESTING: list[BootMode] = [
    BootMode.PROD,
    BootMode.DEV,
    BootMode.TEST
]


def merge_app_rc(
    rc_path: Path,
    mode: BootMode,
    *,
    is_explicit: bool = False
) -> AppRC:
    """Loads app rc yaml and merges its mode sections up to given mode.

    Args:
        rc_path:
            Path of the app rc file.
        mode:
            Current boot mode. Sections are applied in order prod, dev, test
            and the merge stops at this mode.
        is_explicit (optional):
            Whether the path has been requested explicitly. Missing or empty
            files are errors only for explicit paths.

    Returns:
        Merged app rc.

    Raises:
        AppRCSearchError:
            Explicit path does not exist.
        EmptyAppRCError:
            Explicit file contains no sections.
        UnsupportedAppRCKeyError:
            Some top-level key is not a boot mode.
    """
    final_app_rc: AppRC = {}

    if not rc_path.exists():
        if is_explicit:
            raise AppRCSearchError(f"no apprc on path {rc_path}")
        return final_app_rc

    app_rc: AppRC = load_yml(rc_path)

    if app_rc == {} and is_explicit:
        raise EmptyAppRCError(f"apprc on path {rc_path} is empty")

    supported_top_level_keys: list[str] = [x.value for x in BootMode]
    for k in app_rc.keys():
        if k not in supported_top_level_keys:
            raise UnsupportedAppRCKeyError(
                f"unsupported top-level key \"{k}\" of apprc config"
            )

    mode_nesting_index: int = APP_RC_MODE_NESTING.index(mode)
    for nesting_mode in APP_RC_MODE_NESTING[:mode_nesting_index + 1]:
        # Missing mode sections are fine
        with contextlib.suppress(KeyError, TypeError):
            final_app_rc.update(app_rc[nesting_mode.value])

    return final_app_rc
