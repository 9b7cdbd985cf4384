from typing import List, Optional
import logging

from database.json_db import ReportDatabase
from database.models import SeriesCheck
from errors import UnknownIdentity
from qseries.bridge import bridge_pairs
from qseries.identities import EQUATION_IDS, IDENTITY_BUILDERS, build_identity_side
from qseries.series import series_equal

logger = logging.getLogger(__name__)


class IdentityChecker:
    def __init__(self, db: Optional[ReportDatabase] = None):
        self.db = db

    def _finish(self, check: SeriesCheck, save: bool) -> SeriesCheck:
        if check.equal:
            logger.info(f"{check.identity} (N={check.N}): OK")
        else:
            logger.warning(f"{check.identity} (N={check.N}): расхождение {check.first_discrepancy}")
        if save and self.db is not None:
            self.db.add_series_check(check.to_dict())
        return check

    def check_identity(self, identity: str, N: int, m: int = 1, save: bool = False) -> SeriesCheck:
        """Сравнивает левую и правую части тождества до степени N"""
        if identity not in EQUATION_IDS:
            raise UnknownIdentity(f"Тождество {identity} не имеет двух сторон для сравнения")
        lhs = build_identity_side(identity, "lhs", m, N)
        rhs = build_identity_side(identity, "rhs", m, N)
        equal, discrepancy = series_equal(lhs, rhs)
        uses_m = IDENTITY_BUILDERS[identity]["uses_m"]
        check = SeriesCheck(identity=identity, N=N, equal=equal, m=m if uses_m else None,
                            first_discrepancy=discrepancy)
        return self._finish(check, save)

    def check_specializations(self, N: int, m: int = 1) -> List[SeriesCheck]:
        """General при a=-1 совпадает с AndrewsM; General при m=1 совпадает с AndrewsTheta"""
        checks = []
        for side in ("lhs", "rhs"):
            general = build_identity_side("General", side, m, N)
            equal, discrepancy = series_equal(general.substitute_a(-1), build_identity_side("AndrewsM", side, m, N))
            checks.append(self._finish(
                SeriesCheck(identity=f"General[a=-1]~AndrewsM:{side}", N=N, equal=equal, m=m,
                            first_discrepancy=discrepancy),
                save=False,
            ))
            equal, discrepancy = series_equal(
                build_identity_side("General", side, 1, N), build_identity_side("AndrewsTheta", side, 1, N)
            )
            checks.append(self._finish(
                SeriesCheck(identity=f"General[m=1]~AndrewsTheta:{side}", N=N, equal=equal,
                            first_discrepancy=discrepancy),
                save=False,
            ))
        return checks

    def check_bridges(self, N: int, m_values: List[int] = None) -> List[SeriesCheck]:
        """Перебор против произведений: каждая комбинаторная сторона против аналитической"""
        checks = []
        for pair in bridge_pairs(m_values):
            equal, discrepancy = series_equal(pair["enumerate"](N), pair["analytic"](N))
            checks.append(self._finish(
                SeriesCheck(identity=pair["name"], N=N, equal=equal, m=pair["m"],
                            first_discrepancy=discrepancy),
                save=False,
            ))
        return checks
