import sys
import Chromify


class LogType:
    def __init__(self, name: str, level: int):
        """
        Initialize a LogType instance with a name and a severity level.

        Args:
        - name (str): The name of the log type.
        - level (int): Severity, higher is more important.
        """
        self.name = name
        self.level = level


class Types:
    DEBUG = LogType("DEBUG", 10)
    INFO = LogType("INFO", 20)
    SUCCESS = LogType("SUCCESS", 25)
    WARNING = LogType("WARNING", 30)
    ERROR = LogType("ERROR", 40)


class Theme:
    def __init__(self, themeType: LogType, symbol: str, lightColor: Chromify.Color, mediumColor: Chromify.Color, darkColor: Chromify.Color):
        """
        Initialize a Theme for one log type.

        Args:
        - themeType (LogType): The log type this theme renders.
        - symbol (str): One character shown between brackets.
        - lightColor (Chromify.Color): Color of the message body.
        - mediumColor (Chromify.Color): Color of the symbol and the name.
        - darkColor (Chromify.Color): Color of the brackets.
        """
        self.logtype = themeType
        self.symbol = symbol
        self.lightColor = lightColor
        self.mediumColor = mediumColor
        self.darkColor = darkColor


class Themes:
    ERROR = Theme(Types.ERROR, "!", Chromify.Color("#ff5555"), Chromify.Color("#ff2020"), Chromify.Color("#cc0000"))
    WARNING = Theme(Types.WARNING, "*", Chromify.Color("#ff9911"), Chromify.Color("#ff8000"), Chromify.Color("#ff6600"))
    INFO = Theme(Types.INFO, ">", Chromify.Color("#5555ff"), Chromify.Color("#2020ff"), Chromify.Color("#0000cc"))
    SUCCESS = Theme(Types.SUCCESS, "$", Chromify.Color("#55ff55"), Chromify.Color("#35ff35"), Chromify.Color("#00cc00"))
    DEBUG = Theme(Types.DEBUG, "?", Chromify.Color("#aaaaaa"), Chromify.Color("#808080"), Chromify.Color("#444444"))


class Logger:
    """
    Themed diagnostics on stderr. stdout is reserved for data, so nothing here
    ever writes to it.

    Attributes:
    - level (int): Messages below this level are dropped (default INFO).
    - stream: Target stream; None means the current sys.stderr.
    """
    level = Types.INFO.level
    stream = None

    @staticmethod
    def setLevel(logtype: LogType):
        """
        Set the minimum level that gets printed.

        Args:
        - logtype (LogType): One of the Types members.
        """
        Logger.level = logtype.level

    @staticmethod
    def _target():
        return Logger.stream if Logger.stream is not None else sys.stderr

    @staticmethod
    def format(message: str, theme: Theme, name: str = None, colored: bool = True) -> str:
        """
        Build the log line without printing it.

        Args:
        - message (str): The message to log.
        - theme (Theme): The theme used for formatting.
        - name (str, optional): Label shown before the message (default is the log type name).
        - colored (bool, optional): Emit Chromify color codes (default is True).

        Returns:
        - str: The formatted line.
        """
        label = name if name is not None else theme.logtype.name
        if not colored:
            return f"[{theme.symbol}] {label}: {message}"
        return f"{theme.darkColor.fore()}[{theme.mediumColor.fore()}{theme.symbol}{theme.darkColor.fore()}] {theme.mediumColor.fore()}{label}: {theme.lightColor.fore()}{message}{Chromify.Style.RESET_ALL}"

    @staticmethod
    def log(message: str, theme: Theme, name: str = None, preindentations: int = 0):
        """
        Log a message with a specific theme, if its level passes the filter.

        Args:
        - message (str): The message to log.
        - theme (Theme): The theme used for formatting.
        - name (str, optional): The name associated with the message (default is None).
        - preindentations (int, optional): Number of preceding tab characters (default is 0).
        """
        if theme.logtype.level < Logger.level:
            return
        target = Logger._target()
        colored = hasattr(target, "isatty") and target.isatty()
        print("\t"*preindentations + Logger.format(message, theme, name, colored), file=target)

    @staticmethod
    def error(message: str, name: str = "ERROR", preindentations: int = 0):
        Logger.log(message, Themes.ERROR, name, preindentations)

    @staticmethod
    def warn(message: str, name: str = "WARNING", preindentations: int = 0):
        Logger.log(message, Themes.WARNING, name, preindentations)

    @staticmethod
    def info(message: str, name: str = "INFO", preindentations: int = 0):
        Logger.log(message, Themes.INFO, name, preindentations)

    @staticmethod
    def success(message: str, name: str = "SUCCESS", preindentations: int = 0):
        Logger.log(message, Themes.SUCCESS, name, preindentations)

    @staticmethod
    def debug(message: str, name: str = "DEBUG", preindentations: int = 0):
        Logger.log(message, Themes.DEBUG, name, preindentations)
