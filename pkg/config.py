import os
from dotenv import load_dotenv
load_dotenv()

from dataclasses import dataclass

@dataclass
class Config:
    # Переменные окружения влияют только на логи, число процессов и путь к хранилищу.
    # Вывод CLI зависит только от флагов.
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")
    VERIFY_WORKERS: int = int(os.getenv("VERIFY_WORKERS", "1"))

    # Хранилище отчётов
    DB_PATH: str = os.getenv("REPORTS_DB_PATH", "data/reports.json")

    DEFAULT_SEED: int = 20090
    DEFAULT_NMAX: int = 60
    DEFAULT_N: int = 60

    # Диапазоны приёмочных проверок
    ACCEPTANCE = {
        "census_nmax": 100,
        "weights_nmax": 60,
        "andrews_nmax": 100,
        "theorem_8_2_nmax": 50,
        "involution_nmax_m1": 80,
        "involution_nmax_m": 50,
        "bijection_weight_max": 40,
        "series_N": 200,
        "bridge_N": 40,
        "specialization_N": 120,
    }

    # Формулировки теорем (для справки CLI и отчётов)
    THEOREMS = {
        "T3.1": "sum over P_do(n) of (-1)^l = (-1)^k if n = k^2, else 0",
        "T3.2": "R_e(n) - R_o(n) = (-1)^k if n = k^2, else 0",
        "T4.1": "sum over P_do(n) of the gap weight = (-a)^k if n = k^2, else 0",
        "T5.1": "sum over P_do(n) of (-1)^l a^{l_o} = (-a)^k if n = k^2, else 0",
        "T6.1": "sum over Q(n) of (-1)^{l-1} a^{l_o} = (-a)^k if n = k^2, else 0",
        "AndrewsProblem": "q_o(n) - q_e(n) = 1 if n is a square, else 0",
        "T8.2": "sum over A_m(n) of (-1)^{l-1} a^{l_o} = sum over B_m(n) of (-a)^l",
    }

    IDENTITIES = {
        "Ramanujan": "1 + sum_k (-q;q)_{k-1} (-a)^k q^{k(k+1)/2} / (aq^2;q^2)_k = sum_k (-a)^k q^{k^2}",
        "AndrewsTheta": "sum_n q^{2n} (q^{2n+2};q^2)_inf (aq^{2n+1};q^2)_inf = sum_k (-a)^k q^{k^2}",
        "General": "sum_n q^{2mn} (q^{2mn+2m};q^{2m})_inf (aq^{2mn+1};q^2)_inf = 1 + sum_k (-a)^k q^{k^2} prod_j (1 + q^{2j} + ... + q^{2(m-1)j})",
        "AndrewsM": "General at a = -1",
        "AlladiAlt": "sum_{n>=1} -a q^{2n-1} (q^{2n};q^2)_inf (aq^{2n+1};q^2)_inf = sum_{n>=1} (-a)^n q^{n^2}",
        "AndrewsProblemSeries": "sum_n q^{2n} (q^{2n+2};q^2)_inf (-q^{2n+1};q^2)_inf = sum_k q^{k^2}",
        "AmCount": "counting series of A_m (left side only)",
        "BmCount": "counting series of B_m (left side only)",
    }

config = Config()
