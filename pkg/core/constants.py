from pathlib import Path
from typing import Final

ROOT_DIR: Final[Path] = Path(__file__).resolve().parent.parent

CONF_SCHEMA_FILE: Final[Path] = ROOT_DIR / "_conf_schema.json"

VERSION: Final[str] = "v1.0.0"

# 随机系数: 分子取自 {-3..3}\{0}, 分母取自 {1,2,3}
SAMPLE_NUMERATORS: Final[tuple[int, ...]] = (-3, -2, -1, 1, 2, 3)
SAMPLE_DENOMINATORS: Final[tuple[int, ...]] = (1, 2, 3)

# 退出码
EXIT_OK: Final[int] = 0
EXIT_FAIL: Final[int] = 1
EXIT_USAGE: Final[int] = 2

# 报告说明: 窗口级证据
WINDOW_NOTE: Final[str] = (
    "window-scale evidence: results leaving the doubled window are discarded"
)

# 单项式运算缓存的容量
MEMO_SIZE: Final[int] = 1 << 16
