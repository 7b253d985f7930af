import datetime
import os

import pytz


def now():
    """
    current UTC time, or SOURCE_DATE_EPOCH when it is set so that written
    results can be reproduced byte for byte
    """
    epoch = os.environ.get("SOURCE_DATE_EPOCH", None)
    if epoch:
        return datetime.datetime.fromtimestamp(int(epoch), tz=pytz.utc)
    return pytz.utc.localize(datetime.datetime.utcnow())
