"""JSON-логирование отчётов проверок."""
import json
import logging
from datetime import datetime
from pathlib import Path
from typing import Optional

logger = logging.getLogger("core.report_logger")


def save_report(reports_dir: str | Path, verb: str, payload: dict,
                when: Optional[datetime] = None) -> Optional[Path]:
    """Сохранить JSON-отчёт команды в каталог отчётов. Ошибки записи только логируются."""
    reports_dir = Path(reports_dir)
    when = when or datetime.now()

    # Имя файла: дата_время_команда.json
    fn = f"{when.strftime('%Y%m%d_%H%M%S')}_{verb}.json"
    path = reports_dir / fn

    try:
        reports_dir.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(payload, ensure_ascii=False, indent=2), encoding="utf-8")
        logger.info(f"Report saved: {fn}")
        return path
    except Exception as e:
        logger.error(f"Report save error: {e}")
        return None
