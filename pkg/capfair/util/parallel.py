from concurrent.futures.thread import ThreadPoolExecutor

from more_itertools import chunked

CHUNK_SIZE = 512


def _run_chunk(func, chunk):
    return [func(item) for item in chunk]


def parallel_map(func, items, workers=1, chunk_size=CHUNK_SIZE):
    """
    Applies `func` to every item and returns the results in input order.

    `func` must be pure; results never depend on the number of workers.

    >>> parallel_map(lambda x: x * x, range(5), workers=3, chunk_size=2)
    [0, 1, 4, 9, 16]
    """
    items = list(items)
    if workers is None or workers <= 1 or len(items) <= chunk_size:
        return [func(item) for item in items]

    chunks = list(chunked(items, chunk_size))
    with ThreadPoolExecutor(max_workers=min(workers, len(chunks))) as pool:
        results = pool.map(lambda chunk: _run_chunk(func, chunk), chunks)
        return [r for chunk_result in results for r in chunk_result]
