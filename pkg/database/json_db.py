import json
import os
from typing import Dict, List, Optional
from datetime import datetime
import logging

logger = logging.getLogger(__name__)


class ReportDatabase:
    def __init__(self, db_path: str):
        self.db_path = db_path
        self._ensure_db_exists()

    def _ensure_db_exists(self):
        """Создаёт файл хранилища если его нет"""
        directory = os.path.dirname(self.db_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        if not os.path.exists(self.db_path):
            initial_data = {
                "theorem_reports": [],
                "series_checks": [],
                "created_at": datetime.now().isoformat(),
                "updated_at": datetime.now().isoformat()
            }
            self._save_data(initial_data)

    def _load_data(self) -> Dict:
        with open(self.db_path, 'r', encoding='utf-8') as f:
            return json.load(f)

    def _save_data(self, data: Dict):
        data['updated_at'] = datetime.now().isoformat()
        with open(self.db_path, 'w', encoding='utf-8') as f:
            json.dump(data, f, ensure_ascii=False, indent=2)

    def add_theorem_report(self, report: Dict) -> int:
        data = self._load_data()
        record = {
            **report,
            'id': len(data['theorem_reports']) + 1,
            'created_at': datetime.now().isoformat()
        }
        data['theorem_reports'].append(record)
        self._save_data(data)
        logger.info(f"Отчёт {report.get('theorem')} сохранён (id={record['id']})")
        return record['id']

    def add_series_check(self, check: Dict) -> int:
        data = self._load_data()
        record = {
            **check,
            'id': len(data['series_checks']) + 1,
            'created_at': datetime.now().isoformat()
        }
        data['series_checks'].append(record)
        self._save_data(data)
        logger.info(f"Проверка ряда {check.get('identity')} сохранена (id={record['id']})")
        return record['id']

    def search_reports(self, theorem: str, m: Optional[int] = None) -> List[Dict]:
        data = self._load_data()
        results = []

        for report in data['theorem_reports']:
            if report.get('theorem') != theorem:
                continue
            if m is not None and report.get('m') != m:
                continue
            results.append(report)

        return results

    def latest_report(self, theorem: str, m: Optional[int] = None) -> Optional[Dict]:
        reports = self.search_reports(theorem, m)
        return reports[-1] if reports else None

    def search_series_checks(self, identity: str) -> List[Dict]:
        data = self._load_data()
        return [check for check in data['series_checks'] if check.get('identity') == identity]
